#include "pghopf/orders.hpp"

#include <algorithm>
#include <utility>

#include "pghopf/grammar.hpp"

namespace pghopf {

namespace {

std::string entry_name(const IntegralityWitness& w) {
  return "(" + std::to_string(w.row + 1) + "," + std::to_string(w.col + 1) + ")";
}

void require_integral(const MatK& m, const char* what) {
  if (auto w = find_non_integral(m)) {
    throw NotIntegralError(std::string(what) + " is not integral: entry " + entry_name(*w) + " has valuation " +
                               to_string(w->valuation),
                           *w);
  }
}

void swap_columns(MatK& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.size(); ++r) std::swap(m(r, a), m(r, b));
}

// column dst += c * column src
void add_column_multiple(MatK& m, std::size_t dst, std::size_t src, const RatFunc& c) {
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (!m(r, src).is_zero()) m(r, dst) += c * m(r, src);
  }
}

void scale_column(MatK& m, std::size_t col, const RatFunc& c) {
  for (std::size_t r = 0; r < m.size(); ++r) m(r, col) *= c;
}

using RawMatrix = std::vector<std::vector<Field::Raw>>;

RawMatrix raw_mul(const Field& f, const RawMatrix& x, const RawMatrix& y) {
  const std::size_t n = x.size();
  RawMatrix out(n, std::vector<Field::Raw>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] = f.add(out[i][j], f.mul(x[i][k], y[k][j]));
    }
  }
  return out;
}

RawMatrix raw_frobenius(const Field& f, RawMatrix m) {
  for (auto& row : m) {
    for (auto& x : row) x = f.frobenius(x);
  }
  return m;
}

std::size_t raw_rank(const Field& f, RawMatrix m) {
  const std::size_t n = m.size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    const Field::Raw inv = f.inv(m[rank][c]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Field::Raw factor = f.mul(m[r][c], inv);
      for (std::size_t j = c; j < n; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<std::string> default_names(const std::string& stem, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

std::vector<std::string> HopfPresentation::relations() const {
  const std::string p = std::to_string(A.field().characteristic());
  std::vector<std::string> rels;
  for (std::size_t i = 0; i < A.size(); ++i) {
    const std::string lin = format_linear_combination(A.column(i), gens);
    std::string rel = gens[i] + "^" + p;
    if (lin != "0") rel += " - (" + lin + ")";
    rels.push_back(std::move(rel));
  }
  return rels;
}

std::string HopfPresentation::to_text() const {
  std::string out = "R[";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + gens[i];
  out += "]/(";
  const auto rels = relations();
  for (std::size_t i = 0; i < rels.size(); ++i) out += (i ? ", " : "") + rels[i];
  return out + ")";
}

HopfPresentation presentation_from_matrix(const MatK& A, std::vector<std::string> gens) {
  require_integral(A, "presentation matrix");
  if (gens.empty()) gens = default_names("u", A.size());
  if (gens.size() != A.size()) throw DimensionMismatch("generator count differs from matrix size");
  return HopfPresentation{A, std::move(gens)};
}

std::vector<std::string> embedding_generators(const ThetaEmbedding& e) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < e.theta.size(); ++i) {
    out.push_back(format_linear_combination(e.theta.column(i), e.target_gens));
  }
  return out;
}

OrderOutcome order_from_theta(const MatK& B, const MatK& theta) {
  if (B.size() != theta.size()) throw DimensionMismatch("B and Theta differ in size");
  require_integral(B, "B");
  MatK A = inverse(theta) * (B * frobenius_twist(theta));
  if (auto w = find_non_integral(A)) return NotIntegral{std::move(A), *w};
  const std::size_t n = theta.size();
  ThetaEmbedding emb{theta, default_names("u", n), default_names("t", n)};
  HopfPresentation pres{A, emb.source_gens};
  return OrderResult{std::move(A), std::move(emb), std::move(pres)};
}

bool verify_twisted_equation(const MatK& theta, const MatK& A, const MatK& B) {
  if (theta.size() != A.size() || A.size() != B.size()) throw DimensionMismatch("verify: sizes differ");
  return theta * A == B * frobenius_twist(theta);
}

bool same_order(const MatK& theta, const MatK& theta2) {
  if (theta.size() != theta2.size()) throw DimensionMismatch("same_order: sizes differ");
  return is_unit(inverse(theta) * theta2);
}

DdlResult ddl_normalize(const MatK& input) {
  const std::size_t n = input.size();
  const Field& f = input.field();
  if (det(input).is_zero()) throw SingularMatrix("ddl_normalize: matrix is singular");
  MatK theta = input;
  MatK U = MatK::identity(f, n);

  // Triangularize: row k becomes zero to the right of the diagonal.
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = k;
    for (std::size_t j = k + 1; j < n; ++j) {
      if (theta(k, j).valuation() < theta(k, best).valuation()) best = j;
    }
    swap_columns(theta, k, best);
    swap_columns(U, k, best);
    const RatFunc pivot_inv = theta(k, k).inverse();
    for (std::size_t j = k + 1; j < n; ++j) {
      if (theta(k, j).is_zero()) continue;
      // integral, since the pivot has least valuation in the row
      const RatFunc c = -(theta(k, j) * pivot_inv);
      add_column_multiple(theta, j, k, c);
      add_column_multiple(U, j, k, c);
      theta(k, j) = RatFunc(f);
    }
  }

  const RatFunc one = RatFunc::from_integer(f, 1);
  for (std::size_t k = 0; k < n; ++k) {
    // Dominance: entries left of the diagonal may not exceed its valuation.
    const Valuation dv = theta(k, k).valuation();
    for (std::size_t j = 0; j < k; ++j) {
      if (theta(k, j).valuation() > dv) {
        add_column_multiple(theta, j, k, one);
        add_column_multiple(U, j, k, one);
      }
    }
    // Make the diagonal exactly pi^v with a unit rescaling of the column.
    const RatFunc unit = RatFunc::pi_power(f, dv.value()) / theta(k, k);
    if (!unit.is_one()) {
      scale_column(theta, k, unit);
      scale_column(U, k, unit);
    }
  }
  return DdlResult{std::move(theta), std::move(U)};
}

bool is_ddl(const MatK& theta) {
  const std::size_t n = theta.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!theta(i, j).is_zero()) return false;
    }
    if (!theta(i, i).is_pi_power()) return false;
    const Valuation dv = theta(i, i).valuation();
    for (std::size_t j = 0; j < i; ++j) {
      if (theta(i, j).valuation() > dv) return false;
    }
  }
  return true;
}

MatK scale_to_integral(const MatK& theta) {
  Valuation m = Valuation::infinity();
  for (std::size_t i = 0; i < theta.size(); ++i) {
    for (std::size_t j = 0; j < theta.size(); ++j) m = std::min(m, theta(i, j).valuation());
  }
  if (m.is_infinite()) throw std::invalid_argument("scale_to_integral: zero matrix");
  if (m == Valuation(0)) return theta;
  return theta.scaled(RatFunc::pi_power(theta.field(), -m.value()));
}

std::string FibreReport::kind() const {
  if (etale) return "etale";
  if (connected) return "connected";
  return "mixed";
}

FibreReport special_fibre(const MatK& A) {
  require_integral(A, "A");
  const std::size_t n = A.size();
  const Field& f = A.field();
  FibreReport report;
  RawMatrix abar(n, std::vector<Field::Raw>(n, 0));
  report.reduced.assign(n, std::vector<FqElem>(n, FqElem::zero(f)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      report.reduced[i][j] = A(i, j).reduce_mod_pi();
      abar[i][j] = report.reduced[i][j].raw();
    }
  }
  // N_1 = Abar, N_{m+1} = N_m * Abar^(p^m)
  RawMatrix twisted = abar;
  RawMatrix power = abar;
  for (std::size_t m = 1; m <= n; ++m) {
    report.fpower_ranks.push_back(raw_rank(f, power));
    twisted = raw_frobenius(f, std::move(twisted));
    power = raw_mul(f, power, twisted);
  }
  report.etale_rank = report.fpower_ranks.back();
  report.connected = report.etale_rank == 0;
  report.etale = report.etale_rank == n;
  return report;
}

}  // namespace pghopf
