// Exact projective geometry in RP^{k-1} over the rationals.
//
// A configuration is an ordered list of n points, each stored as a
// homogeneous coordinate vector (a representative). Predicates only look at
// the projective points; the representatives matter for piecewise-linear
// paths, which interpolate them coordinatewise.

#ifndef GNK_PROJECTIVE_HPP_
#define GNK_PROJECTIVE_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "gnk/error.hpp"
#include "gnk/invariants.hpp"
#include "gnk/rational.hpp"
#include "gnk/word.hpp"

namespace gnk {

  class GeometryError : public Error {
   public:
    enum class Kind {
      degenerate_input,
      degenerate_keyframe,
      tangential_event,
      simultaneous_events,
      identically_singular_segment,
      zero_crossing,
      certification_failure
    };

    GeometryError(Kind kind, std::string const& msg)
        : Error(name(kind) + ": " + msg), _kind(kind) {}

    Kind kind() const noexcept {
      return _kind;
    }

    static std::string name(Kind kind);

   private:
    Kind _kind;
  };

  using HVector = std::vector<Rational>;

  // The representative whose last nonzero coordinate is 1. Throws
  // GeometryError for the zero vector.
  HVector canonical(HVector const& v);

  bool proportional(HVector const& u, HVector const& v);

  class ProjectivePoint {
   public:
    explicit ProjectivePoint(HVector const& v) : _c(canonical(v)) {}

    HVector const& coords() const noexcept {
      return _c;
    }
    bool operator==(ProjectivePoint const&) const = default;

   private:
    HVector _c;
  };

  class RationalMatrix {
   public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _a(rows * cols) {}
    // From rows; all rows must have equal length.
    explicit RationalMatrix(std::vector<HVector> const& rows);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    Rational& operator()(std::size_t i, std::size_t j) {
      return _a[i * _cols + j];
    }
    Rational const& operator()(std::size_t i, std::size_t j) const {
      return _a[i * _cols + j];
    }

    Rational       determinant() const;
    std::size_t    rank() const;
    RationalMatrix inverse() const;  // throws GeometryError if singular

    HVector        operator*(HVector const& v) const;
    RationalMatrix operator*(RationalMatrix const& b) const;

    bool operator==(RationalMatrix const&) const = default;

   private:
    std::size_t           _rows, _cols;
    std::vector<Rational> _a;
  };

  class ProjectiveTransform {
   public:
    // Throws GeometryError unless the matrix is square and invertible.
    explicit ProjectiveTransform(RationalMatrix m);

    RationalMatrix const& matrix() const noexcept {
      return _m;
    }
    HVector apply(HVector const& v) const {
      return _m * v;
    }

   private:
    RationalMatrix _m;
  };

  struct Configuration {
    GroupParams          params;
    std::vector<HVector> points;  // n representatives of length k

    // Throws GeometryError on wrong sizes or a zero vector.
    Configuration(GroupParams const& p, std::vector<HVector> pts);

    // Point i, 1-based.
    HVector const& operator[](int i) const {
      return points[static_cast<std::size_t>(i - 1)];
    }

    bool operator==(Configuration const&) const = default;
  };

  // Same projective point for every index.
  bool projectively_equal(Configuration const& a, Configuration const& b);

  // Determinant of the rows of canonical representatives of the points in m,
  // ascending by index.
  Rational det_subset(Configuration const& c, Letter m);

  // The first (k-1)-subset (1-based, ascending) not spanning a
  // (k-1)-dimensional space, if any.
  std::optional<std::vector<int>>
  general_position_violation(Configuration const& c);

  inline bool is_general_position(Configuration const& c) {
    return !general_position_violation(c).has_value();
  }

  // All k-subsets with vanishing determinant, in lexicographic order.
  std::vector<Letter> singular_subsets(Configuration const& c);

  // A with A p_i ~ e_i (i <= k) and A p_{k+1} ~ (1, ..., 1).
  ProjectiveTransform standardize_frame(std::span<ProjectivePoint const> pts);

  // (e_1, ..., e_k, (s_1, ..., s_{k-1}, 1)) for n = k + 1.
  Configuration base_configuration(SignString const& s);

  // The signs of the first k - 1 coordinates of point k + 1, scaled so that
  // its k-th coordinate is 1. Points 1..k must be e_1..e_k.
  SignString sign_string_of(Configuration const& c);

  // The unit-determinant family A(t) = I + t (A_1 - I), where A_1 fixes
  // e_1..e_{k-1} and sends point k to a multiple of e_k.
  struct ShearFamily {
    RationalMatrix end_matrix;  // A_1
    Configuration  end;         // A_1 applied to every representative

    RationalMatrix at(Rational const& t) const;
    // The keyframe transforms A(0) = I and A(1) = A_1.
    std::vector<ProjectiveTransform> keyframes() const;
  };

  ShearFamily shear_family(Configuration const& c);

  struct Segment {
    Configuration start;
    Configuration end;
  };

  // Moves point k + 1 linearly to its sign vector, other points fixed; the
  // start uses canonical representatives. Points 1..k must be e_1..e_k.
  Segment sign_snap_geodesic(Configuration const& c);

}  // namespace gnk

#endif  // GNK_PROJECTIVE_HPP_
