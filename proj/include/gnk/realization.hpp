// Words as motions of k + 1 points in RP^{k-1}, and back.
//
// A path is piecewise linear on the stored representatives: between
// keyframes x and y a point moves along (1 - t) x + t y. Along one segment the
// determinant of any k points is then a polynomial of degree at most k in t,
// and the letters of the path's word are the subsets whose determinants
// vanish, in time order. Every vanishing must be a simple root strictly
// inside a segment, and no two subsets may vanish at the same moment.
//
// In the opposite direction, each letter is realised by an explicit path from
// a base configuration z_s to z_{s'}, with s' given by the sign action. The
// letter b_1 = a_{1..k} cannot be realised by moving point k + 1: it is the
// only subset not containing it. Moving point k across the hyperplane of the
// others and shearing it back is what makes such a path exist in projective
// space, where the affine "locked" position of a point inside the triangle
// of the others does not occur.

#ifndef GNK_REALIZATION_HPP_
#define GNK_REALIZATION_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "gnk/invariants.hpp"
#include "gnk/polynomial.hpp"
#include "gnk/projective.hpp"
#include "gnk/word.hpp"

namespace gnk {

  class PLPath {
   public:
    // At least two keyframes, all with parameters p. Geometric validity is
    // checked by validate_path and detect_events, not here.
    PLPath(GroupParams const& p, std::vector<Configuration> keyframes);

    static PLPath constant(Configuration const& c);

    GroupParams const& params() const noexcept {
      return _params;
    }
    std::vector<Configuration> const& keyframes() const noexcept {
      return _keyframes;
    }
    std::size_t num_segments() const noexcept {
      return _keyframes.size() - 1;
    }
    Configuration const& front() const {
      return _keyframes.front();
    }
    Configuration const& back() const {
      return _keyframes.back();
    }

    // Concatenation. other.front() must be projectively equal to back();
    // each point of `other` is rescaled by one constant across all its
    // keyframes so that the representatives match at the junction, which
    // changes neither the motion nor its events.
    void append(PLPath const& other);

    bool operator==(PLPath const&) const = default;

   private:
    GroupParams                _params;
    std::vector<Configuration> _keyframes;
  };

  // Throws GeometryError (degenerate_keyframe or zero_crossing) unless every
  // keyframe is in general position with no singular subset and no
  // representative passes through the zero vector.
  void validate_path(PLPath const& path);

  // The determinant of the points of m along one segment, as a polynomial in
  // the segment parameter t in [0, 1].
  Polynomial segment_determinant(PLPath const& path,
                                 std::size_t   segment,
                                 Letter        m);

  struct SingularEvent {
    std::size_t  segment;
    RootInterval t;  // exact, or an isolating interval of a simple root
    Letter       subset;

    bool operator==(SingularEvent const&) const = default;
  };

  // "1/2" for exact times, "[lo,hi]" otherwise.
  std::string to_string(RootInterval const& t);

  // Every event of the path in time order. Throws GeometryError with kind
  // degenerate_keyframe, zero_crossing, identically_singular_segment,
  // tangential_event or simultaneous_events.
  std::vector<SingularEvent> detect_events(PLPath const& path);

  Word word_from_path(PLPath const& path);

  struct LetterPath {
    PLPath     path;
    SignString end_sign;
  };

  // A certified path from base_configuration(s) with exactly one event, for
  // `letter`, ending projectively at base_configuration(s'), where s' is the
  // sign action of the letter on s. Throws GeometryError
  // (certification_failure) if the constructed path does not check out.
  LetterPath letter_path(GroupParams const& p, Letter letter, SignString const& s);

  // Concatenated letter paths from z_{(+,...,+)}; a constant path for the
  // empty word.
  PLPath path_from_word(Word const& w);

  // An event-free path from c (points 1..k-1 at e_1..e_{k-1}, no singular
  // subset) to a base configuration, together with its sign string.
  LetterPath void_path_to_base(Configuration const& c);

  struct RoundtripReport {
    Word       input;
    Word       recovered;
    SignString endpoint;
    SignString expected_endpoint;
    bool       ok;
  };

  RoundtripReport certify_roundtrip(Word const& w);

  PLPath apply_transform_to_path(ProjectiveTransform const& a,
                                 PLPath const&              path);

}  // namespace gnk

#endif  // GNK_REALIZATION_HPP_
