#ifndef PGHOPF_ORDERS_HPP
#define PGHOPF_ORDERS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pghopf/matrix.hpp"

namespace pghopf {

/*
 * Hopf orders in a primitively generated K-Hopf algebra H of rank p^n.
 *
 * H is described by a matrix B over R recording the p-th powers of a
 * primitive generating set t_1..t_n: t_i^p = sum_j b_{j,i} t_j. An invertible
 * Theta over K yields A = Theta^{-1} B Theta^(p); when A is integral, the
 * R-algebra with primitive generators u_i and relations
 * u_i^p = sum_j a_{j,i} u_j is a Hopf order of H, embedded by
 * u_i -> sum_j theta_{j,i} t_j. Two embeddings give the same order iff
 * Theta^{-1} Theta' lies in GL_n(R).
 */

/// A matrix that had to be integral was not.
class NotIntegralError : public std::domain_error {
 public:
  NotIntegralError(const std::string& what, IntegralityWitness witness)
      : std::domain_error(what), witness_(witness) {}
  const IntegralityWitness& witness() const { return witness_; }

 private:
  IntegralityWitness witness_;
};

std::vector<std::string> default_names(const std::string& stem, std::size_t n);

/// R[u_1..u_n] / (u_i^p - sum_j a_{j,i} u_j), all u_i primitive.
struct HopfPresentation {
  MatK A;
  std::vector<std::string> gens;

  /// "u1^p - (lin)" with the numeric p, one per generator.
  std::vector<std::string> relations() const;
  /// "R[u1,...,un]/(rel1, ..., reln)"
  std::string to_text() const;
};

/// Throws NotIntegralError if A is not over R.
HopfPresentation presentation_from_matrix(const MatK& A, std::vector<std::string> gens = {});

/// Column i of theta sends source generator i to sum_j theta_{j,i} target_j.
struct ThetaEmbedding {
  MatK theta;
  std::vector<std::string> source_gens;
  std::vector<std::string> target_gens;
};

/// The images of the source generators, e.g. {"T*t1 + t2 + t3", "t2", "T*t3"}.
std::vector<std::string> embedding_generators(const ThetaEmbedding& e);

struct OrderResult {
  MatK A;
  ThetaEmbedding embedding;
  HopfPresentation presentation;
};

struct NotIntegral {
  MatK A;
  IntegralityWitness witness;
};

using OrderOutcome = std::variant<OrderResult, NotIntegral>;

inline bool is_order(const OrderOutcome& o) { return std::holds_alternative<OrderResult>(o); }

/// A = Theta^{-1} B Theta^(p), kept when integral. B must be integral;
/// throws SingularMatrix for singular Theta.
OrderOutcome order_from_theta(const MatK& B, const MatK& theta);

/// Theta A == B Theta^(p), exactly.
bool verify_twisted_equation(const MatK& theta, const MatK& A, const MatK& B);

/// Theta^{-1} Theta' in GL_n(R).
bool same_order(const MatK& theta, const MatK& theta2);

struct DdlResult {
  MatK theta;  ///< diagonal dominant lower triangular
  MatK U;      ///< GL_n(R) certificate: theta = input * U
};

/*
 * Column-reduces an invertible Theta to DDL form without changing the order
 * it defines. Row by row: move the column of least valuation in the row to
 * the diagonal, clear the row to the right, then lift left entries whose
 * valuation exceeds the diagonal's and rescale the diagonal to a pi-power.
 */
DdlResult ddl_normalize(const MatK& theta);

/// Lower triangular, diagonal entries exactly pi^m, and each diagonal
/// valuation >= the valuation of every entry to its left.
bool is_ddl(const MatK& theta);

/// pi^{-m} Theta for m the least entry valuation; throws on the zero matrix.
MatK scale_to_integral(const MatK& theta);

/*
 * Special fibre of the order with matrix A: Abar = A mod pi and the ranks of
 * N_m = Abar Abar^(p) ... Abar^(p^{m-1}), the matrix of F^m on the fibre.
 */
struct FibreReport {
  std::vector<std::vector<FqElem>> reduced;
  std::vector<std::size_t> fpower_ranks;  ///< m = 1..n
  std::size_t etale_rank = 0;
  bool connected = false;
  bool etale = false;

  /// "etale", "connected" or "mixed"
  std::string kind() const;
};

/// Throws NotIntegralError if A is not over R.
FibreReport special_fibre(const MatK& A);

}  // namespace pghopf

#endif  // PGHOPF_ORDERS_HPP
