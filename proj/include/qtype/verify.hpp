#pragma once

#include "qtype/local_algebra.hpp"
#include "qtype/slicing.hpp"

#include <string>
#include <vector>

namespace qtype {

struct CorpusEntry {
    std::string name;
    IdealPresentation ideal;
};

std::vector<std::string> corpus_names();
// Throws invalid_argument for an unknown name.
std::vector<CorpusEntry> corpus(const std::string& name);

enum class LawStatus { pass, fail, skipped };
std::string status_name(LawStatus s);

struct LawResult {
    std::string law;
    std::string instance;
    LawStatus status;
    std::string detail;
};

struct VerifyOptions {
    SliceSampler sampler;
    int budget = 8;
    // Random (curve, directrix) pairs for the cylinder postconditions.
    int cylinder_pairs = 20;
};

// Law names:
//   multiplicity-chain            Delta_1 <= D <= Delta_1^(n-k) when Delta_1 is certified
//   sampled-inf-chain             inf <= tilde <= inf^(n-q+1) for 2 <= q <= n
//   catlin-below-generic          catlin estimate <= tilde for 2 <= q <= n-1
//   catlin-equals-generic         equality of the two when both are certified
//   generic-multiplicity-min-mode min = mode of the sampled multiplicities
//   cylinder-postconditions       psi(t,0) = Gamma, tangent space contains the directrix
//   cylinder-rejects-tangent      tangent direction inside the directrix is an error
std::vector<LawResult> verify_corpus(const std::vector<CorpusEntry>& entries, const VerifyOptions& options);
std::vector<LawResult> verify_random_cylinders(const VerifyOptions& options);

bool all_passed(const std::vector<LawResult>& results);

}  // namespace qtype
