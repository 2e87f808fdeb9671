#include "hdpart/catalog.hpp"

#include <string>

#include "hdpart/box.hpp"
#include "hdpart/errors.hpp"
#include "hdpart/golden.hpp"
#include "hdpart/transforms.hpp"

namespace hdpart {

std::string_view name(Method m) {
  switch (m) {
    case Method::Enumerate: return "enumerate";
    case Method::Transform: return "transform";
    case Method::All: return "all";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  for (Method m : {Method::Enumerate, Method::Transform, Method::All})
    if (name(m) == text) return m;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

namespace {

bool enumerable(TriangleKind k) {
  switch (k) {
    case TriangleKind::A:
    case TriangleKind::B:
    case TriangleKind::C:
    case TriangleKind::D:
    case TriangleKind::F:
    case TriangleKind::Abox2:
    case TriangleKind::Cbox2:
    case TriangleKind::Fbox2:
      return true;
    default:
      return false;
  }
}

bool transformable(TriangleKind k) { return k != TriangleKind::Cbox2; }

std::optional<Coord> box_of(TriangleKind k) {
  if (k == TriangleKind::Abox2 || k == TriangleKind::Cbox2 || k == TriangleKind::Fbox2) return Coord{2};
  return std::nullopt;
}

Triangle enumerate_A(TriangleKind kind, long n_max, const EnumOptions& opts) {
  Triangle A(kind);
  A.reserve_rows(n_max);
  for (long n = 1; n <= n_max; ++n) A.set(n, 0, n == 1 ? 1 : 0);
  for (long r = 1; r <= n_max - 1; ++r) {
    auto col = count_A_column(static_cast<std::size_t>(r), static_cast<std::size_t>(n_max - 1 - r), box_of(kind), opts);
    for (std::size_t m = 0; m < col.size(); ++m) A.set(static_cast<long>(m) + r + 1, r, col[m]);
  }
  return A;
}

Triangle enumerate_C(TriangleKind kind, long m_max, const EnumOptions& opts) {
  Triangle C(kind);
  C.reserve_rows(m_max);
  for (long m = 0; m <= m_max; ++m) C.set(m, 0, m == 0 ? 1 : 0);
  for (long x = 1; x <= 2 * m_max; ++x) {
    auto col = count_C_entry(static_cast<std::size_t>(x), static_cast<std::size_t>(m_max), box_of(kind), opts);
    for (std::size_t m = 0; m < col.size(); ++m) C.set(static_cast<long>(m), x, col[m]);
  }
  return C;
}

Triangle enumerate_D(long m_max, const EnumOptions& opts) {
  Triangle D(TriangleKind::D);
  D.reserve_rows(m_max);
  for (long m = 0; m <= m_max; ++m) D.set(m, 0, m == 0 ? 1 : 0);
  for (long x = 1; x <= 2 * m_max; ++x) {
    auto col = count_D_entry(static_cast<std::size_t>(x), static_cast<std::size_t>(m_max), opts);
    for (std::size_t m = 0; m < col.size(); ++m) D.set(static_cast<long>(m), x, col[m]);
  }
  return D;
}

Triangle enumerate_F(TriangleKind kind, long n_max, const EnumOptions& opts) {
  Triangle F(kind);
  F.reserve_rows(n_max);
  for (long n = 1; n <= n_max; ++n) F.set(n, 0, n == 1 ? 1 : 0);
  for (long r = 1; r <= n_max - 1; ++r) {
    auto col =
        count_F_column(static_cast<std::size_t>(r), static_cast<std::size_t>(n_max - 1 - r), box_of(kind), opts);
    for (std::size_t m = 0; m < col.size(); ++m) F.set(static_cast<long>(m) + r + 1, r, col[m]);
  }
  return F;
}

void check_ambient(long ambient, const EnumOptions& opts) {
  if (ambient > static_cast<long>(opts.guard.max_ambient) && !opts.guard.override_limits)
    throw ConfigError("these rows need ambient dimension " + std::to_string(ambient) + ", beyond the scale guard of " +
                      std::to_string(opts.guard.max_ambient));
}

Triangle by_enumeration(TriangleKind kind, long last, const EnumOptions& opts) {
  const bool m_rows = default_row_origin(kind) == 0;
  check_ambient(m_rows ? 2 * last : last - 1, opts);
  switch (kind) {
    case TriangleKind::A:
    case TriangleKind::Abox2:
      return enumerate_A(kind, last, opts);
    case TriangleKind::B:
      return B_from_A(enumerate_A(TriangleKind::A, last, opts));
    case TriangleKind::C:
    case TriangleKind::Cbox2:
      return enumerate_C(kind, last, opts);
    case TriangleKind::D:
      return enumerate_D(last, opts);
    case TriangleKind::F:
    case TriangleKind::Fbox2:
      return enumerate_F(kind, last, opts);
    default:
      break;
  }
  throw ConfigError(std::string(name(kind)) + " cannot be computed by enumeration");
}

Triangle by_transform(TriangleKind kind, long last) {
  switch (kind) {
    case TriangleKind::A:
      return reference_A().truncated(last);
    case TriangleKind::B:
      return B_from_A(reference_A()).truncated(last);
    case TriangleKind::C:
      return A_to_C(reference_A(), last);
    case TriangleKind::D:
      return C_to_D(A_to_C(reference_A(), last), last);
    case TriangleKind::F:
      return A_to_F(reference_A(), last);
    case TriangleKind::T:
      return hanna_T_from_B(B_from_A(reference_A()), last);
    case TriangleKind::Alpha:
      return alpha_from_C(reference_C(), last);
    case TriangleKind::Beta:
      return beta_from_alpha(alpha_from_C(reference_C(), reference_C().last_row())).truncated(last);
    case TriangleKind::Abox2:
      return reference_Abox2().truncated(last);
    case TriangleKind::Fbox2:
      return A_to_F(reference_Abox2(), last);
    case TriangleKind::Chat:
      return chat_from_C(reference_C(), golden_triangle(GoldenId::Cbox2), last);
    case TriangleKind::Fhat:
      return fhat_from_A(reference_A(), reference_Abox2(), last);
    case TriangleKind::CD:
      return cD_from_e(last);
    default:
      break;
  }
  throw ConfigError(std::string(name(kind)) + " cannot be computed by transform");
}

void require_rows(const Triangle& t, long last) {
  // Beta rows are only partially determined by the available alpha rows.
  if (t.kind() == TriangleKind::Beta) {
    if (!t.has_row(last))
      throw DataError("beta: row " + std::to_string(last) + " is beyond the available data");
    return;
  }
  for (long r = default_row_origin(t.kind()); r <= last; ++r)
    if (!t.row_complete(r))
      throw DataError(std::string(t.name()) + ": row " + std::to_string(r) + " is beyond the available data");
}

}  // namespace

bool supports(TriangleKind kind, Method method) {
  switch (method) {
    case Method::Enumerate: return enumerable(kind);
    case Method::Transform: return transformable(kind);
    case Method::All: return enumerable(kind) || transformable(kind);
  }
  return false;
}

Triangle compute_triangle(TriangleKind kind, long rows, Method method, const EnumOptions& opts) {
  if (rows < 1) throw ConfigError("at least one row must be requested");
  const long last = default_row_origin(kind) + rows - 1;
  if (!supports(kind, method))
    throw ConfigError(std::string(name(kind)) + " does not support method '" + std::string(name(method)) + "'");

  if (method == Method::Enumerate || (method == Method::All && !transformable(kind))) {
    Triangle t = by_enumeration(kind, last, opts);
    require_rows(t, last);
    return t;
  }
  Triangle t = by_transform(kind, last);
  require_rows(t, last);
  if (method == Method::All && enumerable(kind)) {
    Triangle e = by_enumeration(kind, last, opts);
    for (long r = default_row_origin(kind); r <= last; ++r)
      for (long c = t.col_origin(); c <= t.support_last(r); ++c)
        if (t.at(r, c) != e.at(r, c))
          throw MismatchError(std::string(name(kind)) + "(" + std::to_string(r) + ", " + std::to_string(c) +
                              "): transform gives " + to_string(t.at(r, c)) + ", enumeration gives " +
                              to_string(e.at(r, c)));
  }
  return t;
}

}  // namespace hdpart
