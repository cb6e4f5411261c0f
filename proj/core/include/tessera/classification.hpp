#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tessera/algebra.hpp"
#include "tessera/algebra_io.hpp"
#include "tessera/positivity.hpp"
#include "tessera/univariate.hpp"

namespace tessera {

enum class CandidateMode { Shaped, Raw };
std::string_view mode_string(CandidateMode mode);
CandidateMode parse_mode(std::string_view text);

struct Candidate {
  StructureConstant constant;
  // Named signs (alpha, beta, ...) in shaped mode, "C(a,b)" entries in raw mode.
  std::vector<std::pair<std::string, int>> parameters;

  std::string parameter_string() const;
};

// Shaped mode applies the normalized table shapes; raw mode lists every unital
// sign array. Parameters run through +1 before -1, first parameter slowest.
std::vector<Candidate> enumerate_candidates(const FiniteGroup& group, BasisConvention convention, CandidateMode mode);

struct RejectedCandidate {
  Candidate candidate;
  char side = 'L';  // determinant carrying the witness: 'L' for det M^L, 'R' for det M^R
  MultiPoly determinant;
  ZeroWitness witness;
};

struct SurvivingCandidate {
  Candidate candidate;
  MultiPoly det_left;
  MultiPoly det_right;
  // Absent for the trivial grading, where det = y0 vanishes only at the origin.
  std::optional<SosCertificate> cert_left;
  std::optional<SosCertificate> cert_right;
};

struct UndeterminedCandidate {
  Candidate candidate;
  MultiPoly det_left;
  MultiPoly det_right;
};

struct ClassificationReport {
  FiniteGroup group;
  BasisConvention convention;
  CandidateMode mode;
  std::size_t candidates_examined = 0;
  std::vector<RejectedCandidate> rejected;
  std::vector<SurvivingCandidate> survivors;
  std::vector<UndeterminedCandidate> undetermined;
};

struct ClassifyOptions {
  GridSpec grid;
  unsigned threads = 0;  // 0: thread_count()
};

ClassificationReport classify(const FiniteGroup& group, BasisConvention convention, CandidateMode mode,
                              const ClassifyOptions& options = {});

// Re-checks every certificate and witness in the report against freshly computed determinants.
bool verify_report(const ClassificationReport& report);

// The survivor for the mirrored convention is the transpose of the primary survivor.
bool opposite_uniqueness_check(const FiniteGroup& group, BasisConvention convention);

struct Fingerprint {
  bool commutative = false;
  bool flexible = false;
  bool power_associative = false;
  // Identity-space dimensions keyed by pattern ("2,1", "4", "2,2", "3,1").
  std::map<std::string, std::size_t> identity_dimensions;

  bool operator==(const Fingerprint& o) const {
    return commutative == o.commutative && flexible == o.flexible && power_associative == o.power_associative &&
           identity_dimensions == o.identity_dimensions;
  }
  bool operator!=(const Fingerprint& o) const { return !(*this == o); }
};

Fingerprint non_isomorphism_fingerprint(const TwistedAlgebra& algebra);

// x with x.(x.x) != (x.x).x, when one exists among small arguments.
std::optional<AlgebraElement> power_associativity_witness(const TwistedAlgebra& algebra);

struct OddOrderWitness {
  int prime = 0;
  std::vector<int> subgroup;
  // det M^L on the cyclic subalgebra with all non-identity components set to 1, in y_e.
  UniPoly determinant;
  RootInterval root;
};

// Throws std::invalid_argument when |G| is a power of two.
OddOrderWitness odd_order_zero_divisor(const FiniteGroup& group, const StructureConstant& c);

// M^L(y) nonsingular at `samples` random nonzero integer points.
bool random_nonsingularity_check(const StructureConstant& c, std::size_t samples, unsigned seed);

// Element labels in basis order: "0".."3" for cyclic groups, "(n,m)" for the Klein group.
std::vector<std::string> element_labels(const FiniteGroup& group);
// Row label = left factor, column label = right factor.
std::string constant_markdown(const StructureConstant& c);
Json report_to_json(const ClassificationReport& report);
std::string report_to_markdown(const ClassificationReport& report);

}  // namespace tessera
