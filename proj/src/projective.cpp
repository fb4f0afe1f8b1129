#include "gnk/projective.hpp"

#include <bit>  // for popcount

namespace gnk {

  std::string GeometryError::name(Kind kind) {
    switch (kind) {
      case Kind::degenerate_input:
        return "DegenerateInput";
      case Kind::degenerate_keyframe:
        return "DegenerateKeyframe";
      case Kind::tangential_event:
        return "TangentialEvent";
      case Kind::simultaneous_events:
        return "SimultaneousEvents";
      case Kind::identically_singular_segment:
        return "IdenticallySingularSegment";
      case Kind::zero_crossing:
        return "ZeroCrossing";
      case Kind::certification_failure:
        return "CertificationFailure";
    }
    return "GeometryError";
  }

  HVector canonical(HVector const& v) {
    for (std::size_t i = v.size(); i-- > 0;) {
      if (v[i] != 0) {
        Rational const s = v[i];
        HVector        out(v);
        for (auto& x : out) {
          x /= s;
        }
        return out;
      }
    }
    throw GeometryError(GeometryError::Kind::degenerate_input,
                        "zero homogeneous vector");
  }

  bool proportional(HVector const& u, HVector const& v) {
    if (u.size() != v.size()) {
      return false;
    }
    // u ~ v iff all 2x2 minors vanish.
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = i + 1; j < u.size(); ++j) {
        if (u[i] * v[j] != u[j] * v[i]) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // RationalMatrix
  ////////////////////////////////////////////////////////////////////////

  RationalMatrix::RationalMatrix(std::vector<HVector> const& rows)
      : _rows(rows.size()), _cols(rows.empty() ? 0 : rows[0].size()) {
    _a.reserve(_rows * _cols);
    for (auto const& r : rows) {
      if (r.size() != _cols) {
        throw GeometryError(GeometryError::Kind::degenerate_input,
                            "ragged matrix rows");
      }
      _a.insert(_a.end(), r.begin(), r.end());
    }
  }

  RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  namespace {
    // Row echelon form in place; returns (rank, determinant sign/product).
    std::pair<std::size_t, Rational> eliminate(RationalMatrix& m) {
      std::size_t r   = 0;
      Rational    det = 1;
      for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) {
          ++piv;
        }
        if (piv == m.rows()) {
          det = 0;
          continue;
        }
        if (piv != r) {
          for (std::size_t j = 0; j < m.cols(); ++j) {
            std::swap(m(piv, j), m(r, j));
          }
          det = -det;
        }
        det *= m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
          if (m(i, c) == 0) {
            continue;
          }
          Rational f = m(i, c) / m(r, c);
          for (std::size_t j = c; j < m.cols(); ++j) {
            m(i, j) -= f * m(r, j);
          }
        }
        ++r;
      }
      if (r < m.rows()) {
        det = 0;
      }
      return {r, det};
    }
  }  // namespace

  Rational RationalMatrix::determinant() const {
    if (_rows != _cols) {
      throw GeometryError(GeometryError::Kind::degenerate_input,
                          "determinant of a non-square matrix");
    }
    RationalMatrix m(*this);
    return eliminate(m).second;
  }

  std::size_t RationalMatrix::rank() const {
    RationalMatrix m(*this);
    return eliminate(m).first;
  }

  RationalMatrix RationalMatrix::inverse() const {
    std::size_t const n = _rows;
    if (_rows != _cols) {
      throw GeometryError(GeometryError::Kind::degenerate_input,
                          "inverse of a non-square matrix");
    }
    // Gauss-Jordan on [A | I].
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        aug(i, j) = (*this)(i, j);
      }
      aug(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && aug(piv, c) == 0) {
        ++piv;
      }
      if (piv == n) {
        throw GeometryError(GeometryError::Kind::degenerate_input,
                            "singular matrix");
      }
      for (std::size_t j = 0; j < 2 * n; ++j) {
        std::swap(aug(piv, j), aug(c, j));
      }
      Rational const d = aug(c, c);
      for (std::size_t j = 0; j < 2 * n; ++j) {
        aug(c, j) /= d;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || aug(i, c) == 0) {
          continue;
        }
        Rational const f = aug(i, c);
        for (std::size_t j = 0; j < 2 * n; ++j) {
          aug(i, j) -= f * aug(c, j);
        }
      }
    }
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) = aug(i, n + j);
      }
    }
    return out;
  }

  HVector RationalMatrix::operator*(HVector const& v) const {
    if (v.size() != _cols) {
      throw GeometryError(GeometryError::Kind::degenerate_input,
                          "matrix-vector size mismatch");
    }
    HVector out(_rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        out[i] += (*this)(i, j) * v[j];
      }
    }
    return out;
  }

  RationalMatrix RationalMatrix::operator*(RationalMatrix const& b) const {
    RationalMatrix out(_rows, b._cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t l = 0; l < _cols; ++l) {
        for (std::size_t j = 0; j < b._cols; ++j) {
          out(i, j) += (*this)(i, l) * b(l, j);
        }
      }
    }
    return out;
  }

  ProjectiveTransform::ProjectiveTransform(RationalMatrix m) : _m(std::move(m)) {
    if (_m.rows() != _m.cols() || _m.determinant() == 0) {
      throw GeometryError(GeometryError::Kind::degenerate_input,
                          "transform matrix is singular");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Configurations
  ////////////////////////////////////////////////////////////////////////

  Configuration::Configuration(GroupParams const& p, std::vector<HVector> pts)
      : params(p), points(std::move(pts)) {
    if (points.size() != static_cast<std::size_t>(p.n)) {
      throw GeometryError(GeometryError::Kind::degenerate_input,
                          "configuration needs n = " + std::to_string(p.n)
                              + " points");
    }
    for (auto const& x : points) {
      if (x.size() != static_cast<std::size_t>(p.k)) {
        throw GeometryError(GeometryError::Kind::degenerate_input,
                            "points need k = " + std::to_string(p.k)
                                + " homogeneous coordinates");
      }
      bool zero = true;
      for (auto const& a : x) {
        zero = zero && a == 0;
      }
      if (zero) {
        throw GeometryError(GeometryError::Kind::degenerate_input,
                            "zero homogeneous vector");
      }
    }
  }

  bool projectively_equal(Configuration const& a, Configuration const& b) {
    if (!(a.params == b.params)) {
      return false;
    }
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      if (!proportional(a.points[i], b.points[i])) {
        return false;
      }
    }
    return true;
  }

  Rational det_subset(Configuration const& c, Letter m) {
    std::vector<HVector> rows;
    for (int i : m.elements()) {
      rows.push_back(canonical(c[i]));
    }
    return RationalMatrix(rows).determinant();
  }

  std::optional<std::vector<int>>
  general_position_violation(Configuration const& c) {
    int const n = c.params.n, r = c.params.k - 1;
    // Enumerate (k-1)-subsets lexicographically.
    std::vector<int> sub(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      sub[i] = i + 1;
    }
    while (true) {
      std::vector<HVector> rows;
      for (int i : sub) {
        rows.push_back(c[i]);
      }
      if (RationalMatrix(rows).rank() < static_cast<std::size_t>(r)) {
        return sub;
      }
      int i = r - 1;
      while (i >= 0 && sub[i] == n - r + i + 1) {
        --i;
      }
      if (i < 0) {
        return std::nullopt;
      }
      ++sub[i];
      for (int j = i + 1; j < r; ++j) {
        sub[j] = sub[j - 1] + 1;
      }
    }
  }

  std::vector<Letter> singular_subsets(Configuration const& c) {
    std::vector<Letter> out;
    for (Letter m : alphabet(c.params)) {
      if (det_subset(c, m) == 0) {
        out.push_back(m);
      }
    }
    return out;
  }

  ProjectiveTransform standardize_frame(std::span<ProjectivePoint const> pts) {
    if (pts.size() < 2) {
      throw GeometryError(GeometryError::Kind::degenerate_input,
                          "standardize_frame needs k + 1 points");
    }
    std::size_t const k = pts.size() - 1;
    for (auto const& x : pts) {
      if (x.coords().size() != k) {
        throw GeometryError(GeometryError::Kind::degenerate_input,
                            "standardize_frame needs k + 1 points in RP^{k-1}");
      }
    }
    // Every k-subset must be independent.
    for (std::size_t skip = 0; skip <= k; ++skip) {
      std::vector<HVector> rows;
      for (std::size_t i = 0; i <= k; ++i) {
        if (i != skip) {
          rows.push_back(pts[i].coords());
        }
      }
      if (RationalMatrix(rows).determinant() == 0) {
        throw GeometryError(GeometryError::Kind::degenerate_input,
                            "points other than " + std::to_string(skip + 1)
                                + " are dependent");
      }
    }
    // Columns p_1..p_k; solve M lambda = p_{k+1}.
    RationalMatrix M(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        M(i, j) = pts[j].coords()[i];
      }
    }
    HVector const lambda = M.inverse() * pts[k].coords();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        M(i, j) *= lambda[j];
      }
    }
    return ProjectiveTransform(M.inverse());
  }

  Configuration base_configuration(SignString const& s) {
    int const   k = static_cast<int>(s.signs.size()) + 1;
    GroupParams p = GroupParams::last_level(k);
    std::vector<HVector> pts;
    for (int i = 0; i < k; ++i) {
      HVector e(static_cast<std::size_t>(k));
      e[i] = 1;
      pts.push_back(std::move(e));
    }
    HVector y(static_cast<std::size_t>(k));
    for (int j = 0; j < k - 1; ++j) {
      y[j] = s.signs[j];
    }
    y[k - 1] = 1;
    pts.push_back(std::move(y));
    return Configuration(p, std::move(pts));
  }

  namespace {
    bool is_basis_vector(HVector const& v, std::size_t i) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        if ((j == i) != (v[j] != 0)) {
          return false;
        }
      }
      return true;
    }

    void require_frame(Configuration const& c, int upto, char const* what) {
      c.params.require_last_level(what);
      for (int i = 1; i <= upto; ++i) {
        if (!is_basis_vector(c[i], static_cast<std::size_t>(i - 1))) {
          throw PreconditionError(std::string(what) + ": point "
                                  + std::to_string(i) + " is not e_"
                                  + std::to_string(i));
        }
      }
    }
  }  // namespace

  SignString sign_string_of(Configuration const& c) {
    require_frame(c, c.params.k, "sign_string_of");
    int const      k = c.params.k;
    HVector const& z = c[k + 1];
    SignString     s;
    for (int j = 0; j < k; ++j) {
      if (z[j] == 0) {
        throw GeometryError(
            GeometryError::Kind::degenerate_input,
            "coordinate " + std::to_string(j + 1) + " of point "
                + std::to_string(k + 1) + " is zero (configuration is singular)");
      }
    }
    int const last = sign(z[k - 1]);
    for (int j = 0; j < k - 1; ++j) {
      s.signs.push_back(static_cast<std::int8_t>(sign(z[j]) * last));
    }
    return s;
  }

  RationalMatrix ShearFamily::at(Rational const& t) const {
    std::size_t const k = end_matrix.rows();
    RationalMatrix    m = RationalMatrix::identity(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        m(i, j) += t * (end_matrix(i, j) - (i == j ? 1 : 0));
      }
    }
    return m;
  }

  std::vector<ProjectiveTransform> ShearFamily::keyframes() const {
    return {ProjectiveTransform(RationalMatrix::identity(end_matrix.rows())),
            ProjectiveTransform(end_matrix)};
  }

  ShearFamily shear_family(Configuration const& c) {
    require_frame(c, c.params.k - 1, "shear_family");
    std::size_t const k  = static_cast<std::size_t>(c.params.k);
    HVector const&    xk = c[c.params.k];
    if (xk[k - 1] == 0) {
      throw GeometryError(GeometryError::Kind::degenerate_input,
                          "point k has zero k-th coordinate");
    }
    RationalMatrix a = RationalMatrix::identity(k);
    for (std::size_t j = 0; j + 1 < k; ++j) {
      a(j, k - 1) = -xk[j] / xk[k - 1];
    }
    std::vector<HVector> pts;
    for (auto const& x : c.points) {
      pts.push_back(a * x);
    }
    return ShearFamily{a, Configuration(c.params, std::move(pts))};
  }

  Segment sign_snap_geodesic(Configuration const& c) {
    SignString const     s = sign_string_of(c);
    std::vector<HVector> pts;
    for (auto const& x : c.points) {
      pts.push_back(canonical(x));
    }
    return Segment{Configuration(c.params, std::move(pts)),
                   base_configuration(s)};
  }

}  // namespace gnk
