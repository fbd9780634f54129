// Executable claims about T(S), R(S), L(S), F(S), A(S), the Rees matrix
// semigroup and the Higgins semiband, checked by exhaustive computation on
// individual semigroups or on whole corpora.

#ifndef SEMIBAND_VERIFICATION_HPP
#define SEMIBAND_VERIFICATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semiband/constructions.hpp"
#include "semiband/semigroup.hpp"

namespace semiband {

  enum class ClaimId {
    E_TR2_Lemma,
    TS_Idempotents,
    TS_Semiband4,
    Phi_Embeds,
    FS_Orders,
    TS_iso_AS,
    A1_Subsemigroup,
    Preserve_FinPerReg,
    PreGreen_Lemma,
    Green_Formulas,
    Order_Formula,
    Restriction_Corollary,
    Subgroup_Iso,
    LocalMonoid_Iso,
    LocallyV,
    Simple_Family,
    Kernel_0bar,
    ZeroSimple_Family,
    RS_Semiband2,
    RegularSub_Restriction,
    RS_Preservations,
    RStar_ZeroSimple,
    CompletelyRegular_RS,
    Pastijn_A1_CR,
    Higgins_Iso,
    Sigma_Reg_Bound,
    Sigma_nm_Bound,
  };

  extern std::vector<ClaimId> const all_claims;

  std::string_view       to_string(ClaimId c) noexcept;
  std::optional<ClaimId> claim_from_string(std::string_view name);

  enum class Verdict { pass, pass_sampled, fail, skipped };

  std::string_view to_string(Verdict v) noexcept;

  struct ClaimResult {
    ClaimId           claim;
    Verdict           verdict = Verdict::pass;
    std::vector<Elem> witness;  // nonempty on fail
    std::string       detail;   // failure explanation or skip reason
    double            millis = 0;
  };

  struct VerifyOptions {
    std::uint64_t seed    = 0;
    std::size_t   samples = 16;  // regular subsemigroups per member
    std::size_t   jobs    = 1;
  };

  // Replacement tables for T(S) and R(S), used to inject faults. Decode
  // entries must still describe the intended triples.
  struct Overrides {
    std::optional<ConstructionBundle> T;
    std::optional<ConstructionBundle> R;
  };

  // Runs each claim on S. Claims whose preconditions fail are skipped.
  // member_seed feeds the subsemigroup sampler.
  std::vector<ClaimResult> verify_semigroup(Semigroup const&     S,
                                            std::span<ClaimId const> claims,
                                            std::uint64_t        member_seed = 0,
                                            VerifyOptions const& opts        = {},
                                            Overrides const&     overrides   = {});

  struct ReportEntry {
    std::string member;
    ClaimResult result;
  };

  struct VerificationReport {
    std::vector<ReportEntry> entries;

    bool        all_pass() const;  // no fail entries
    std::size_t count(Verdict v) const;
    // Claims that no member exercised with its preconditions met.
    std::vector<ClaimId> uncovered(std::span<ClaimId const> claims) const;

    // [{member, claim, verdict, witness?, detail?, millis?}]
    nlohmann::json to_json(bool timing = true) const;
    std::string    to_text() const;
  };

  // Members are verified independently (in parallel with opts.jobs > 1);
  // entries are sorted by member canonical table, then claim.
  VerificationReport verify_corpus(std::vector<std::pair<std::string, Semigroup>> const& members,
                                   std::span<ClaimId const> claims,
                                   VerifyOptions const&     opts = {});

  ////////////////////////////////////////////////////////////////////////
  // Fault injection
  ////////////////////////////////////////////////////////////////////////

  struct MutationTrial {
    std::string          member;
    std::string          construction;  // "T" or "R"
    Elem                 row = 0, col = 0, old_value = 0, new_value = 0;
    bool                 detected = false;
    std::vector<ClaimId> caught_by;
  };

  // Corrupts one random cell of T(S) or R(S) for randomly chosen members
  // and reruns the construction claims against the corrupted table.
  std::vector<MutationTrial> mutation_trials(
      std::vector<std::pair<std::string, Semigroup>> const& members,
      std::size_t                                           trials,
      std::uint64_t                                         seed);

  ////////////////////////////////////////////////////////////////////////
  // Order bounds for depth-2 embeddings of regular semigroups
  ////////////////////////////////////////////////////////////////////////

  struct BoundReport {
    std::string member;
    std::size_t n = 0;        // |S|
    std::size_t m = 0;        // largest maximal subgroup
    std::size_t l = 0;        // largest L-class
    std::size_t r = 0;        // largest R-class
    std::size_t r_size = 0;   // |R(S)|
    std::size_t l_size = 0;   // |L(S)|
    bool        left_group  = false;
    bool        right_group = false;

    std::size_t two_n_squared() const {
      return 2 * n * n;
    }
    // |R(S)| <= 2nl <= 2n^2 and |L(S)| <= 2nr
    bool reg_bound_ok() const;
    // lr <= mn and min(|R|,|L|)^2 <= 4 n^3 m
    bool nm_bound_ok() const;
    // |R(S)| = 2n^2
    bool tight() const {
      return r_size == two_n_squared();
    }
    // |R| = 2n^2 iff left group, |L| = 2n^2 iff right group
    bool extremal_ok() const;
  };

  // Throws NotRegular for a non-regular member.
  BoundReport check_bounds(std::string member, Semigroup const& S);
  std::vector<BoundReport> check_bounds(
      std::vector<std::pair<std::string, Semigroup>> const& members);

  nlohmann::json to_json(BoundReport const& b);

}  // namespace semiband

#endif  // SEMIBAND_VERIFICATION_HPP
