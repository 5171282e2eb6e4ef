#pragma once

// Standing hypotheses on R = Q/(f_1..f_c): the f_l form a regular sequence,
// and Proj R is smooth (the Jacobian ideal is irrelevant-primary).

#include <optional>
#include <string>
#include <vector>

#include "etalab/ring.hpp"

namespace etalab {

struct RegularSequenceVerdict {
  bool verified = false;
  int checked_to = 0;
  std::optional<int> failed_at;
  long expected = 0;  // product formula at the failure degree
  long actual = 0;    // dim R at the failure degree
};

/// Coefficient of t^e in prod_l (1 - t^{d_l}) / (1-t)^v, for e = 0..D.
std::vector<long> product_formula(int v, const std::vector<int>& degrees, int D);

RegularSequenceVerdict regular_sequence_check(const RingDescriptor& ring, int D);

enum class SingularityVerdict { Yes, NoWithinBound, Skipped };

struct IsolatedSingularityVerdict {
  SingularityVerdict verdict = SingularityVerdict::Skipped;
  std::optional<int> vanishes_from;  // first e with (Q/J)_e = 0
  int checked_to = 0;
  std::vector<long> dims;            // dim (Q/J)_e, e = 0..checked_to
  int minors = 0;                    // nonzero c x c Jacobian minors
  std::vector<std::string> warnings;
};

/// All c x c minors of the Jacobian (d f_l / d x_i), by cofactor expansion.
std::vector<RationalPolynomial> jacobian_minors(const RingDescriptor& ring);

IsolatedSingularityVerdict isolated_singularity_check(const RingDescriptor& ring, int D);

struct RingCertificate {
  RegularSequenceVerdict regular;
  IsolatedSingularityVerdict isolated;
  long degree = 1;
  int n = 0, c = 0, v = 0;
};

RingCertificate certify(const RingDescriptor& ring, int D);

std::string to_string(SingularityVerdict v);

}  // namespace etalab
