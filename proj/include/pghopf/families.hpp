#ifndef PGHOPF_FAMILIES_HPP
#define PGHOPF_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pghopf/orders.hpp"

namespace pghopf {

/// Catalogued Hopf algebras, identified by their matrix B.
enum class Family {
  alpha_p_n,        ///< B = 0 (any n)
  alpha_p2,         ///< B = [[0,1],[0,0]], R[t]/(t^{p^2})
  zp_x_ap,          ///< B = [[1,0],[0,0]], Z/p x alpha_p
  zp_squared,       ///< B = I_2, (Z/p)^2
  mono_p2,          ///< B = [[0,1],[1,0]], R[t]/(t^{p^2} - t)
  rank1_local,      ///< b = 0
  rank1_separable,  ///< b = 1 (any b in K^x via rank1_orders)
};

std::string to_string(Family f);
/// Throws std::invalid_argument for an unknown tag.
Family parse_family(std::string_view tag);
bool is_rank_p2(Family f);
std::vector<Family> rank_p2_families();

/// B for the family. n is only free for alpha_p_n (default 2); the other
/// families have fixed size and reject a conflicting n.
MatK family_matrix(Family f, const Field& field, std::size_t n = 0);

/*
 * The order H_{i,j,theta} = R[pi^i t1 + theta t2, pi^j t2], i.e. the DDL
 * matrix [[pi^i, 0], [theta, pi^j]]. theta is kept reduced mod pi^j: either
 * exactly pi^j (the class v(theta) >= j) or a Laurent polynomial supported
 * on [v(theta), j).
 */
struct OrderRecord {
  Family family;
  std::int64_t i;
  std::int64_t j;
  RatFunc theta;
};

/// The representative of theta's class mod pi^j.
RatFunc canonical_theta(const RatFunc& theta, std::int64_t j);
OrderRecord make_record(Family f, std::int64_t i, std::int64_t j, const RatFunc& theta);

MatK theta_for_record(const OrderRecord& r);

/// Ground truth: A = Theta^{-1} B Theta^(p) computed and tested for integrality.
OrderOutcome oracle_outcome(const OrderRecord& r);
inline bool oracle_is_order(const OrderRecord& r) { return is_order(oracle_outcome(r)); }

enum class PredicateVariant {
  implemented,
  /// alpha_p2 with the bound i - (p-1) j <= v(theta) <= j in place of the
  /// three per-entry bounds; other families unchanged.
  printed_simplification,
};

/// Closed-form integrality condition for the family's A matrix.
bool predicate(const OrderRecord& r, PredicateVariant variant = PredicateVariant::implemented);

/// alpha_p2 and mono_p2 only: the order is monogenic iff v(theta) = j and p j = i.
std::optional<bool> monogenic_flag(const OrderRecord& r);

struct IndexRange {
  std::int64_t lo;
  std::int64_t hi;
};

/// Default theta depth 2(p + 2).
int default_depth(const Field& field);

/// Laurent polynomials supported on [j - depth, j) (nonzero), then pi^j.
std::vector<RatFunc> theta_sweep(const Field& field, std::int64_t j, int depth);

/// Orders in the grid, canonical, pairwise distinct, sorted by (i, j, theta).
/// zp_squared clamps i, j to be nonnegative.
std::vector<OrderRecord> enumerate_orders(Family f, const Field& field, IndexRange i, IndexRange j, int depth);

struct Disagreement {
  OrderRecord record;
  bool predicate;
  bool oracle;
  std::optional<IntegralityWitness> witness;
};

struct AgreementReport {
  Family family;
  std::uint64_t p;
  PredicateVariant variant;
  std::size_t total = 0;
  std::size_t agreements = 0;
  std::vector<Disagreement> disagreements;

  bool all_agree() const { return agreements == total; }
};

/// predicate vs oracle at every grid point (no clamping).
AgreementReport oracle_check_family(Family f, const Field& field, IndexRange i, IndexRange j, int depth,
                                    PredicateVariant variant = PredicateVariant::implemented);

/// Rank p: H = K[t]/(t^p - b t), orders R[pi^i t].
struct Rank1Result {
  bool is_order;
  RatFunc b;
  /// b * pi^{(p-1) shift}, with 0 <= v <= p - 2 when b != 0
  RatFunc normalized_b;
  std::int64_t shift;
  /// normalized_b * pi^{(p-1) i}: (pi^i t)^p = a (pi^i t)
  RatFunc a;
  std::string description;
};

Rank1Result rank1_orders(const RatFunc& b, std::int64_t i);

}  // namespace pghopf

#endif  // PGHOPF_FAMILIES_HPP
