#include "qwhitney/triangles.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "qwhitney/errors.hpp"
#include "qwhitney/qalg.hpp"

namespace qwhitney {

Params::Params(std::int64_t m_, std::int64_t r_) : m(m_), r(r_) {
  if (m < 1) throw std::invalid_argument("parameter m must be >= 1, got " + std::to_string(m));
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::W2: return "w2";
    case Family::W2Verbatim: return "w2-verbatim";
    case Family::W2Form2: return "w2-star";
    case Family::W2Form3: return "w2-tilde";
    case Family::W1Falling: return "w1";
    case Family::W1Rising: return "w1-rising";
    case Family::Lah: return "lah";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

LaurentPoly family_diagonal(Family family, Params p, std::int64_t n) {
  const std::int64_t rn = checked_mul(p.r, n);
  const std::int64_t mb = checked_mul(p.m, choose2(n));
  switch (family) {
    case Family::W2:
    case Family::W1Rising: return LaurentPoly::q_power(checked_add(rn, mb));
    case Family::W2Verbatim: return LaurentPoly::q_power(checked_add(mb, -rn));
    case Family::W2Form2: return LaurentPoly(1L);
    case Family::W2Form3: return LaurentPoly::q_power(rn);
    case Family::W1Falling: return LaurentPoly::q_power(-checked_add(rn, mb));
    case Family::Lah: return LaurentPoly::q_power(checked_add(2 * rn, 2 * mb));
  }
  throw std::logic_error("unknown family");
}

namespace {

using Rows = std::vector<std::vector<LaurentPoly>>;

const LaurentPoly& entry(const Rows& rows, std::int64_t n, std::int64_t k) {
  static const LaurentPoly zero;
  if (n < 0 || k < 0 || k > n) return zero;
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Appends rows up to nmax using the family's triangular recurrence. Rows
// already present are kept.
void extend_rows(Family family, Params p, Rows& rows, std::int64_t nmax) {
  const std::int64_t m = p.m;
  const std::int64_t r = p.r;
  if (rows.empty()) rows.push_back({LaurentPoly(1L)});

  for (auto n = static_cast<std::int64_t>(rows.size()); n <= nmax; ++n) {
    std::vector<LaurentPoly> row(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
      const LaurentPoly& diag = entry(rows, n - 1, k - 1);
      const LaurentPoly& same = entry(rows, n - 1, k);
      LaurentPoly value;
      switch (family) {
        case Family::W2:
        case Family::W2Form2:
        case Family::W2Form3:
          // W[n,k] = q^{m(k-1)+r} W[n-1,k-1] + [mk+r] W[n-1,k]
          value = diag.shifted(m * (k - 1) + r) + q_bracket(m * k + r) * same;
          break;
        case Family::W2Verbatim:
          value = diag.shifted(m * (k - 1) - r) + q_bracket(m * k - r) * same;
          break;
        case Family::W1Falling: {
          // w[n,k] = q^{-(r+(n-1)m)} (w[n-1,k-1] - [r+(n-1)m] w[n-1,k])
          const std::int64_t c = r + (n - 1) * m;
          value = (diag - q_bracket(c) * same).shifted(-c);
          break;
        }
        case Family::W1Rising: {
          // multiply the previous row by [t + r + (n-1)m]_q = [c] + q^c u
          const std::int64_t c = r + (n - 1) * m;
          value = diag.shifted(c) + q_bracket(c) * same;
          break;
        }
        case Family::Lah:
          // L[n,k] = q^{2r+m(k-1)+m(n-1)} L[n-1,k-1] + [2r+km+(n-1)m] L[n-1,k]
          value = diag.shifted(2 * r + m * (k - 1) + m * (n - 1)) +
                  q_bracket(2 * r + k * m + (n - 1) * m) * same;
          break;
      }
      row[static_cast<std::size_t>(k)] = std::move(value);
    }
    rows.push_back(std::move(row));
  }
}

// The scaled second-kind forms reuse the W2 recurrence and rescale per column.
void rescale_forms(Family family, Params p, Rows& rows) {
  if (family != Family::W2Form2 && family != Family::W2Form3) return;
  for (std::size_t n = 0; n < rows.size(); ++n) {
    for (std::size_t k = 0; k < rows[n].size(); ++k) {
      const auto kk = static_cast<std::int64_t>(k);
      std::int64_t shift = -p.m * choose2(kk);
      if (family == Family::W2Form2) shift -= kk * p.r;
      rows[n][k] = rows[n][k].shifted(shift);
    }
  }
}

Rows build_rows(Family family, Params p, std::int64_t nmax) {
  if (nmax < 0) throw std::invalid_argument("nmax must be >= 0");
  Rows rows;
  if (family == Family::W2Form2 || family == Family::W2Form3) {
    auto base = get_triangle(Family::W2, p, nmax);
    for (std::int64_t n = 0; n <= nmax; ++n) {
      auto r = base->row(n);
      rows.emplace_back(r.begin(), r.end());
    }
    rescale_forms(family, p, rows);
    return rows;
  }
  extend_rows(family, p, rows, nmax);
  return rows;
}

}  // namespace

Triangle::Triangle(Family family, Params params, std::int64_t nmax)
    : Triangle(family, params, build_rows(family, params, nmax)) {}

Triangle Triangle::from_rows(Family family, Params params, Rows rows) {
  if (rows.empty()) throw std::invalid_argument("triangle has no rows");
  for (std::size_t n = 0; n < rows.size(); ++n) {
    if (rows[n].size() != n + 1) {
      throw std::invalid_argument("row " + std::to_string(n) + " has " +
                                  std::to_string(rows[n].size()) + " entries, expected " +
                                  std::to_string(n + 1));
    }
    const auto nn = static_cast<std::int64_t>(n);
    if (rows[n][n] != family_diagonal(family, params, nn)) {
      throw std::invalid_argument("diagonal entry " + std::to_string(n) +
                                  " does not match the family's closed form");
    }
  }
  if (rows[0][0] != LaurentPoly(1L)) throw std::invalid_argument("T[0,0] must be 1");
  return Triangle(family, params, std::move(rows));
}

const LaurentPoly& Triangle::at(std::int64_t n, std::int64_t k) const {
  if (n > nmax()) {
    throw std::out_of_range("triangle row " + std::to_string(n) + " beyond nmax " +
                            std::to_string(nmax()));
  }
  return entry(rows_, n, k);
}

std::span<const LaurentPoly> Triangle::row(std::int64_t n) const {
  if (n < 0 || n > nmax()) throw std::out_of_range("triangle row out of range");
  return rows_[static_cast<std::size_t>(n)];
}

std::shared_ptr<const Triangle> get_triangle(Family family, Params params, std::int64_t nmax) {
  using Key = std::tuple<Family, std::int64_t, std::int64_t>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const Triangle>> memo;

  const Key key{family, params.m, params.r};
  {
    std::lock_guard lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end() && it->second->nmax() >= nmax) return it->second;
  }
  // Built outside the lock; a concurrent duplicate build is harmless because
  // results are deterministic.
  auto built = std::make_shared<const Triangle>(family, params, std::max<std::int64_t>(nmax, 0));
  std::lock_guard lock(mutex);
  auto& slot = memo[key];
  if (!slot || slot->nmax() < built->nmax()) slot = built;
  return slot;
}

namespace {

LaurentPoly lookup(Family family, Params params, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return {};
  return get_triangle(family, params, n)->at(n, k);
}

}  // namespace

LaurentPoly whitney2(Params params, std::int64_t n, std::int64_t k) {
  return lookup(Family::W2, params, n, k);
}

LaurentPoly whitney2_verbatim(Params params, std::int64_t n, std::int64_t k) {
  return lookup(Family::W2Verbatim, params, n, k);
}

LaurentPoly whitney2_scaled(int form, Params params, std::int64_t n, std::int64_t k) {
  if (form == 2) return lookup(Family::W2Form2, params, n, k);
  if (form == 3) return lookup(Family::W2Form3, params, n, k);
  throw std::invalid_argument("whitney2_scaled: form must be 2 or 3");
}

LaurentPoly whitney1_falling(Params params, std::int64_t n, std::int64_t k) {
  return lookup(Family::W1Falling, params, n, k);
}

LaurentPoly whitney1_rising(Params params, std::int64_t n, std::int64_t k) {
  return lookup(Family::W1Rising, params, n, k);
}

LaurentPoly lah(Params params, std::int64_t n, std::int64_t k) { return lookup(Family::Lah, params, n, k); }

LaurentPoly dowling(Params params, int form, std::int64_t n) {
  Family family{};
  switch (form) {
    case 1: family = Family::W2; break;
    case 2: family = Family::W2Form2; break;
    case 3: family = Family::W2Form3; break;
    default: throw std::invalid_argument("dowling: form must be 1, 2 or 3");
  }
  if (n < 0) return {};
  LaurentPoly sum;
  for (const auto& v : get_triangle(family, params, n)->row(n)) sum += v;
  return sum;
}

LaurentPoly lah_row_sum(Params params, std::int64_t n) {
  if (n < 0) return {};
  LaurentPoly sum;
  for (const auto& v : get_triangle(Family::Lah, params, n)->row(n)) sum += v;
  return sum;
}

const LaurentPoly& InverseMatrix::at(std::int64_t n, std::int64_t k) const {
  if (n > nmax()) throw std::out_of_range("inverse matrix row beyond nmax");
  return entry(rows_, n, k);
}

InverseMatrix invert_unit_triangular(const Triangle& source, std::int64_t nmax) {
  if (nmax > source.nmax()) throw std::out_of_range("inverse requested beyond source triangle");
  Rows inv;
  for (std::int64_t n = 0; n <= nmax; ++n) {
    const LaurentPoly& d = source.at(n, n);
    if (!d.is_unit()) {
      throw NonUnitDiagonal("diagonal entry T[" + std::to_string(n) + "," + std::to_string(n) +
                            "] = " + to_string(d) + " is not a unit");
    }
    const auto& t = d.terms()[0];
    const LaurentPoly d_inv = LaurentPoly::monomial(t.coeff, -t.exponent);

    std::vector<LaurentPoly> row(static_cast<std::size_t>(n) + 1);
    row[static_cast<std::size_t>(n)] = d_inv;
    // M[n,j] = -d^{-1} sum_{k=j}^{n-1} T[n,k] M[k,j]
    for (std::int64_t j = 0; j < n; ++j) {
      LaurentPoly acc;
      for (std::int64_t k = j; k < n; ++k) {
        const LaurentPoly& tk = source.at(n, k);
        if (tk.is_zero()) continue;
        acc += tk * inv[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      }
      row[static_cast<std::size_t>(j)] = -(d_inv * acc);
    }
    inv.push_back(std::move(row));
  }
  return InverseMatrix(source.family(), source.params(), std::move(inv));
}

InverseMatrix invert_unit_triangular(Family family, Params params, std::int64_t nmax) {
  return invert_unit_triangular(*get_triangle(family, params, nmax), nmax);
}

std::shared_ptr<const InverseMatrix> get_inverse(Family family, Params params, std::int64_t nmax) {
  using Key = std::tuple<Family, std::int64_t, std::int64_t>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const InverseMatrix>> memo;

  const Key key{family, params.m, params.r};
  {
    std::lock_guard lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end() && it->second->nmax() >= nmax) return it->second;
  }
  auto built = std::make_shared<const InverseMatrix>(
      invert_unit_triangular(family, params, std::max<std::int64_t>(nmax, 0)));
  std::lock_guard lock(mutex);
  auto& slot = memo[key];
  if (!slot || slot->nmax() < built->nmax()) slot = built;
  return slot;
}

}  // namespace qwhitney
