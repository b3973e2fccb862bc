#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "comgraph/commuting_graph.hpp"
#include "comgraph/constructions.hpp"
#include "comgraph/finite_group.hpp"

namespace comgraph {

struct AnalysisOptions {
  std::size_t max_order = kDefaultMaxOrder;
  unsigned threads = 0;
  GraphMode mode = GraphMode::transversal;
};

struct Condition {
  std::string name;
  bool satisfied = false;
  std::string detail;
};

/// One mechanically checked sub-claim, with the elements that witness it.
struct Certificate {
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<ElementId> witnesses;
};

/// Outcome of running a checker on one instance. The conclusion is only
/// checked when every hypothesis condition holds; measured values are
/// recorded either way.
struct TheoremReport {
  std::string theorem;
  std::string instance;
  std::vector<Condition> hypothesis;
  bool hypothesis_satisfied = false;
  bool conclusion_checked = false;
  bool conclusion_holds = false;
  nlohmann::json measured = nlohmann::json::object();
  std::vector<Certificate> certificates;
  std::chrono::milliseconds elapsed{0};

  /// True when the checked conclusion (if any) holds and every certificate passed.
  bool passed() const;
  nlohmann::json to_json() const;
};

/// Diameter of Σ(G) with nullopt for infinity; also nullopt for abelian G.
std::optional<std::uint32_t> commuting_diameter(const GroupPtr& group, const AnalysisOptions& options = {});

/// Graph measurements only: no hypothesis, conclusion unchecked.
TheoremReport measure_graph(const GroupPtr& group, const AnalysisOptions& options = {});

/// Number of conjugacy classes of G made of elements of the given order.
std::size_t classes_of_order(const FiniteGroup& group, std::uint64_t order);

/// Length of the upper central series, or nullopt if G is not nilpotent.
std::optional<unsigned> nilpotency_class(const FiniteGroup& group);

/// G' <= Z(G) and |Z(G)|^3 < |G| imply diameter 2.
TheoremReport check_small_centre(const GroupPtr& group, const AnalysisOptions& options = {});

/// |G : Z(G)| a product of at most three primes implies a disconnected graph.
/// Never asserts connectivity in the other direction.
TheoremReport check_prime_centre_index(const GroupPtr& group, const AnalysisOptions& options = {});

/// Wreath bound: A of even order with trivial center and, for each odd prime
/// p | |A|, fewer than n classes of order-p elements gives a connected
/// graph for A wr S_n with diameter at most 7. Records the exact diameter.
TheoremReport check_wreath_theorem(const GroupPtr& base, std::size_t n, const AnalysisOptions& options = {});

/// Central product bound: both factors non-abelian gives
/// diam <= min{3, diam H, diam K} (disconnected or empty terms count as
/// infinity); exactly one abelian factor gives diam G = diam of the other,
/// including the disconnected case.
TheoremReport check_central_product_theorem(const GroupPtr& left, const GroupPtr& right, CentralIdentification phi,
                                            const AnalysisOptions& options = {});

/// A nilpotent group either has diameter <= 3 or is a p-group. Disconnected
/// graphs are reported but fall outside the claim.
TheoremReport check_nilpotent_corollary(const GroupPtr& group, const AnalysisOptions& options = {});

/// Exhaustive search for an involution commuting with g (g itself if it is an
/// involution). Throws NoWitness if there is none.
ElementId prime_order_involution_witness(const FiniteGroup& group, ElementId g);

/// Runs prime_order_involution_witness on every element of prime order.
TheoremReport check_prime_order_involutions(const GroupPtr& group);

/// With Z(G) trivial and at least two classes of involutions, any two
/// involutions are at distance at most 3. Distances are measured even when
/// the hypothesis fails.
TheoremReport brauer_fowler_check(const GroupPtr& group, const AnalysisOptions& options = {});

/// Every non-central element of the preimage of <xZ, yZ> commutes with every
/// other. Central x or y are allowed; non-commuting x, y give false.
bool coset_clique_check(const FiniteGroup& group, ElementId x, ElementId y);

/// The eleven structural certificates (a)-(k) for the affine family at p,
/// plus the explicit common neighbour of each involution and ((0,1),I).
TheoremReport w_certificates(std::uint32_t p, const AnalysisOptions& options = {});

/// ULT(n, p): disconnected for n = 3; for n >= 4, C(A) ∩ C(B) = Z for
/// A = I + subdiagonal ones and B = I + E_{2,1}, every non-central element
/// commutes with the set {I + x E_{n-1,1} + y E_{n,2}}, and diameter 3.
TheoremReport ult_certificates(std::uint32_t n, std::uint32_t p, const AnalysisOptions& options = {});

}  // namespace comgraph
