#pragma once

#include "balident/poly.hpp"
#include "balident/quadratic.hpp"
#include "balident/sequences.hpp"
#include "balident/sqrt_ext.hpp"
#include "balident/trunc_series.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace balident {

enum class Domain { PolynomialExt, PolynomialQ5, NumericQ5, NumericQi, NumericRational };
enum class Mode { Direct, Series };

std::string_view to_string(Domain d);
std::string_view to_string(Mode m);

struct ParamRange {
  std::string name; // one of "n", "j", "m", "q", "N"
  long long lo = 0;
  long long hi = 0; // inclusive default upper bound
};

struct IdentityDescriptor {
  std::string id;
  std::string anchor;    // catalog label, e.g. "Theorem 1, Eq. (5)"
  std::string statement; // one-line formula in library notation
  Domain domain = Domain::NumericRational;
  std::vector<ParamRange> params;
  bool has_series = false;
};

/// Parameter assignment; the map ordering also fixes rendering order.
using Params = std::map<std::string, long long>;

struct VerificationResult {
  std::string id;
  Params params;
  Mode mode = Mode::Direct;
  bool pass = false;
  std::string lhs; // rendered post-normalization, so pass <=> lhs == rhs
  std::string rhs;
};

/// Per-name grid overrides. An unset field keeps each identity's registry
/// default range; a set one replaces the upper bound, clamped to hard caps.
struct GridLimits {
  std::optional<long long> n_max;
  std::optional<long long> j_max;
  std::optional<long long> m_max;
  std::optional<long long> q_max;
  std::optional<long long> big_n_max; // the summation bound N
};

struct HardCaps {
  long long n = 100;
  long long j = 12;
  long long m = 12;
  long long q = 12;
  long long big_n = 50;
};

HardCaps hard_caps();
std::size_t max_series_order(); // 60

/// Per-task verification state: a private sequence cache plus lazily built
/// EGF series (keyed by identity and parameters) reused across grid points.
class VerifyContext {
public:
  explicit VerifyContext(std::size_t series_order = 25);

  SequenceCache& cache() { return cache_; }
  std::size_t series_order() const { return series_order_; }

  /// Closed-form EGF for a family tag in {"b1","b2","c1","c2","b","c"},
  /// built once at the context's series order.
  const TruncSeries<SqrtExt>& family_series(const std::string& tag);

  struct ExtSeriesPair {
    TruncSeries<SqrtExt> lhs;
    TruncSeries<SqrtExt> rhs;
    ExtSeriesPair(TruncSeries<SqrtExt> l, TruncSeries<SqrtExt> r)
        : lhs(std::move(l)), rhs(std::move(r)) {}
  };
  struct Q5SeriesPair {
    TruncSeries<Poly<QSqrt5>> lhs;
    TruncSeries<Poly<QSqrt5>> rhs;
    Q5SeriesPair(TruncSeries<Poly<QSqrt5>> l, TruncSeries<Poly<QSqrt5>> r)
        : lhs(std::move(l)), rhs(std::move(r)) {}
  };

  /// LHS/RHS proof-route series for thm1, thm2, thm3, thm4-a, thm4-b, eq-gou1.
  const ExtSeriesPair& ext_series(const std::string& id);
  /// LHS/RHS series for thm5-a, thm5-b at a given j.
  const Q5SeriesPair& q5_series(const std::string& id, long long j);

private:
  std::size_t series_order_;
  SequenceCache cache_;
  std::map<std::string, TruncSeries<SqrtExt>> families_;
  std::map<std::string, ExtSeriesPair> ext_pairs_;
  std::map<std::string, Q5SeriesPair> q5_pairs_;
};

const std::vector<IdentityDescriptor>& registry();
const IdentityDescriptor* find_identity(std::string_view id);

/// Verifies one identity instance in the given mode. Throws
/// UnknownIdentityError / ParamRangeError on bad input.
VerificationResult verify(const std::string& id, const Params& params, VerifyContext& ctx,
                          Mode mode = Mode::Direct);

/// Coefficientwise series certification of all n <= order in one call.
/// Supported ids: thm1, thm2, thm3, thm4-a, thm4-b, thm5-a, thm5-b, eq-gou1
/// (thm5 requires a "j" entry in params).
VerificationResult series_check(const std::string& id, std::size_t order, VerifyContext& ctx,
                                const Params& params = {});

struct Case {
  std::string id;
  Params params;
  Mode mode = Mode::Direct;
};

/// Deterministic case list: ids in registry order, direct cases in
/// lexicographic parameter order, then per-coefficient series cases.
std::vector<Case> enumerate_cases(const std::vector<std::string>& ids, const GridLimits& limits,
                                  std::size_t series_order,
                                  std::optional<Mode> mode_filter = std::nullopt);

/// Runs cases across `parallelism` worker tasks (0 = hardware concurrency),
/// each with a private VerifyContext; results keep case order regardless of
/// completion order.
std::vector<VerificationResult> run_cases(const std::vector<Case>& cases, unsigned parallelism,
                                          std::size_t series_order);

/// Cartesian-grid run for a single identity.
std::vector<VerificationResult> verify_grid(const std::string& id, const GridLimits& limits,
                                            std::optional<Mode> mode_filter = std::nullopt,
                                            unsigned parallelism = 1,
                                            std::size_t series_order = 25);

} // namespace balident
