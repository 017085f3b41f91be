#pragma once

#include "sic/codes.hpp"
#include "sic/outcome.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sic {

/// Default limit on the number of tuples an exhaustive checker may enumerate.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

/// A failing tuple.  Column indices are 0-based.
///
///   cover-free      first = U, second = Z
///   d-code          first = S, element = j
///   m-code          first = U, second = Z, element = j
///   designs         first = P, second = P'
struct Counterexample {
  std::vector<std::uint32_t> first;
  std::vector<std::uint32_t> second;
  std::optional<std::uint32_t> element;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Outcome of an exhaustive check.  `witness` is the first failing tuple in
/// the checker's enumeration order and `tuples_checked` is its 1-based
/// position in that order, or the size of the whole domain when the property
/// holds.  Both are independent of the thread count.
struct VerificationReport {
  bool satisfied = true;
  std::optional<Counterexample> witness;
  std::uint64_t tuples_checked = 0;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

enum class DesignMode { AtMost, Exactly };

struct CheckOptions {
  /// Checkers throw Error(BudgetExceeded) instead of enumerating a domain
  /// larger than this.
  std::uint64_t budget = kDefaultBudget;
};

// Enumeration orders.  Subsets are compared lexicographically on their sorted
// column indices; "set lists" are ordered by size, then lexicographically.
//
//   cover-free     U, then Z over the columns outside U
//   d-code         S, then j outside S ascending
//   m-code         |U| ascending, U, j in U ascending, then Z outside U with
//                  |Z| = |U|.  A row that serves Z serves every subset of Z,
//                  so only maximal Z are enumerated.
//   design         unordered pairs (P, P') of the set list, P first
//   threshold      ordered pairs (P, P') of the set list with |P'| <= |P|
//   threshold-bar  ordered pairs (P, P') of the set list with P not inside P'

/// (z,u) cover-free: for all disjoint U, Z with |U| = u, |Z| = z some row is
/// 1 on U and 0 on Z.  Needs z, u >= 1 and z + u <= t.
VerificationReport check_cover_free(const BinaryCode& code, std::uint32_t z, std::uint32_t u,
                                    const CheckOptions& options = {});

/// D_s^l: for every s-set S and column j outside S some row has x(j) = 1 and
/// at most l-1 ones on S.  Needs 1 <= l < s < t.
VerificationReport check_d_code(const BinaryCode& code, std::uint32_t s, std::uint32_t l,
                                const CheckOptions& options = {});

/// M_s^u: for disjoint U, Z with u <= |U| <= s, |Z| <= |U| and every j in U,
/// some row has x(j) = 1, exactly u ones on U and none on Z.
/// Needs 1 <= u < s and 2s < t.
VerificationReport check_m_code(const BinaryCode& code, std::uint32_t s, std::uint32_t u,
                                const CheckOptions& options = {});

/// Outcome vectors of all candidate sets are pairwise distinct.  Candidates
/// are the sets of size exactly s, or of size at most s; for a threshold
/// outcome function the sets smaller than its level are excluded.
/// Needs 1 <= level <= s < t.
VerificationReport check_design(const BinaryCode& code, const OutcomeFunction& outcome, std::uint32_t s,
                                DesignMode mode, const CheckOptions& options = {});

/// Threshold (u, <= s) design: for P != P' with u <= |P'| <= |P| <= s some
/// row fires for P and not for P'.  Needs 1 <= u < s and 2s < t.
VerificationReport check_threshold_design(const BinaryCode& code, std::uint32_t u, std::uint32_t s,
                                          const CheckOptions& options = {});

/// Strong threshold design: as above for every pair with sizes in [u, s] and
/// P not a subset of P'.  Needs 1 <= u < s and 2s < t.
VerificationReport check_threshold_bar_design(const BinaryCode& code, std::uint32_t u, std::uint32_t s,
                                              const CheckOptions& options = {});

/// Sufficient condition for D_s^l on a constant-weight code:
/// s * coincidence <= l * w - 1.  False means "not certified".
/// Throws NotConstantWeight, or ParameterOutOfRange unless 1 <= l < s.
bool check_d_certificate(const BinaryCode& code, std::uint32_t s, std::uint32_t l);

/// Maximum pairwise column dot product.  Throws TooFewColumns if t < 2.
std::size_t coincidence(const BinaryCode& code);

/// Maximum number of positions where two codewords agree.  Throws
/// TooFewColumns if t < 2.
std::size_t coincidence(const QaryCode& code);

/// Straightforward single-threaded implementations that evaluate every tuple
/// row by row exactly as the definitions read.  They share the enumeration
/// orders above and must produce identical reports; they exist to test the
/// optimized checkers.
namespace reference {

VerificationReport check_cover_free(const BinaryCode& code, std::uint32_t z, std::uint32_t u,
                                    const CheckOptions& options = {});
VerificationReport check_d_code(const BinaryCode& code, std::uint32_t s, std::uint32_t l,
                                const CheckOptions& options = {});
VerificationReport check_m_code(const BinaryCode& code, std::uint32_t s, std::uint32_t u,
                                const CheckOptions& options = {});
VerificationReport check_design(const BinaryCode& code, const OutcomeFunction& outcome, std::uint32_t s,
                                DesignMode mode, const CheckOptions& options = {});
VerificationReport check_threshold_design(const BinaryCode& code, std::uint32_t u, std::uint32_t s,
                                          const CheckOptions& options = {});
VerificationReport check_threshold_bar_design(const BinaryCode& code, std::uint32_t u, std::uint32_t s,
                                              const CheckOptions& options = {});
std::size_t coincidence(const BinaryCode& code);

}  // namespace reference

}  // namespace sic
