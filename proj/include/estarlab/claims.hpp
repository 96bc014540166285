#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "estarlab/bioperation.hpp"
#include "estarlab/morphism.hpp"

namespace estarlab {

// ---------------------------------------------------------------------------
// Corpus: the instances every claim is evaluated on.
// ---------------------------------------------------------------------------

struct OpPairInstance {
    BiopContextPtr ctx;
    std::string provenance;
};

struct MorphismInstance {
    std::shared_ptr<const FiniteFunction> f;
    BiopContextPtr dom;
    BiopContextPtr cod;
    std::string provenance;
};

struct TripleInstance {
    std::shared_ptr<const FiniteFunction> f;  // X -> Y
    std::shared_ptr<const FiniteFunction> g;  // Y -> Z
    BiopContextPtr cx, cy, cz;
    std::string provenance;
};

struct CorpusSpec {
    int max_points = 3;               ///< exhaustive topology enumeration bound
    int random_pairs_per_space = 209; ///< seeded operation pairs per topology
    int random_functions = 200;
    int random_triples = 60;
    std::uint64_t seed = 42;
};

struct Corpus {
    CorpusSpec spec;
    std::vector<SpacePtr> spaces;
    std::vector<OpPairInstance> op_pairs;
    std::vector<MorphismInstance> morphisms;
    std::vector<TripleInstance> triples;
};

/// Exhaustive topologies up to spec.max_points, canonical operation pairs
/// (identity / whole-set / closure combinations) plus seeded random pairs,
/// functions, and composition triples. Fully deterministic in (spec).
Corpus build_standard_corpus(const CorpusSpec& spec);

// ---------------------------------------------------------------------------
// Claims
// ---------------------------------------------------------------------------

/// hard_invariant: constructively provable here; a failure aborts with a
/// nonzero status. paper_claim: stated in the source material with an
/// omitted or suspect proof; counterexamples are findings, never aborts.
enum class ClaimKind { hard_invariant, paper_claim };

struct CheckOutcome {
    bool vacuous = false;
    std::optional<std::string> failure;  // least witness, rendered

    static CheckOutcome pass() { return {}; }
    static CheckOutcome skip() { return {true, std::nullopt}; }
    static CheckOutcome fail(std::string detail) { return {false, std::move(detail)}; }
};

struct Claim {
    enum class Target { space, op_pair, morphism, triple };

    std::string id;
    ClaimKind kind = ClaimKind::hard_invariant;
    std::string statement;
    Target target = Target::op_pair;

    std::function<CheckOutcome(const SpacePtr&)> check_space;
    std::function<CheckOutcome(const OpPairInstance&)> check_pair;
    std::function<CheckOutcome(const MorphismInstance&)> check_morphism;
    std::function<CheckOutcome(const TripleInstance&)> check_triple;
};

struct Counterexample {
    std::string detail;
    std::string provenance;
};

struct ClaimReport {
    std::string id;
    ClaimKind kind = ClaimKind::hard_invariant;
    std::string statement;
    std::size_t tested = 0;
    std::size_t non_vacuous = 0;
    bool all_hold = true;
    std::optional<Counterexample> witness;    // least-index failure
    std::optional<Counterexample> minimized;  // after shrinking
};

/// Every registered claim, one per numbered statement of the verified
/// material plus the base family laws. Ids: C-P3.1 … C-T4.2.
const std::vector<Claim>& claim_registry();

/// Throws unknown_claim.
const Claim& find_claim(const std::string& id);

struct RunOptions {
    bool shrink = true;
    int threads = 0;  // 0 = thread_cap()
};

/// Evaluates the claim on every matching corpus instance (deterministic
/// order, parallel over instances) and shrinks the first failure.
ClaimReport run_claim(const Claim& claim, const Corpus& corpus, const RunOptions& options = {});

}  // namespace estarlab
