#pragma once

// Exact property suites for R and sigma. Every suite returns a report; a
// failing report carries the first entry where the two sides disagree.

#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "laxforge/laxengine.hpp"

namespace laxforge {

struct Witness {
  std::string relation;
  int row = 0;  // 1-based
  int col = 0;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string check;
  bool passed = true;
  std::size_t relations_checked = 0;
  bool vacuous = false;
  std::optional<Witness> witness;

  std::string status() const { return vacuous ? "vacuous" : (passed ? "pass" : "fail"); }
  std::string summary() const;
};

/// Accumulates relation checks; keeps the first failure.
class ReportBuilder {
 public:
  explicit ReportBuilder(std::string check) { report_.check = std::move(check); }

  template <class S>
  bool compare(const std::string& relation, const GradedMatrixT<S>& lhs, const GradedMatrixT<S>& rhs);

  /// Records a scalar condition; the witness is kept if it is the first failure.
  bool expect(bool ok, Witness w) {
    ++report_.relations_checked;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.witness = std::move(w);
    }
    return ok;
  }

  void note_vacuous() { vacuous_ = true; }
  CheckReport finish();

 private:
  CheckReport report_;
  bool vacuous_ = false;
};

/// Suite names accepted by run_suite and the command line.
const std::vector<std::string>& suite_names();

/// r12 r13 r23 = r23 r13 r12 on V (x) V (x) V.
CheckReport check_ybe(const RTensor& r);

/// rv12 R13 R23 = R23 R13 rv12 on V (x) V (x) W.
CheckReport check_lax_ybe(const RTensor& rv, const RTensor& rw);

/// r Delta(x) = P Delta(x) P r for x in {e_c, f_c, q^{+-h_c/2}}.
CheckReport check_intertwining(const RTensor& r, const Representation& rep);

/// Delta(sigma_ba) from the construction on W (x) W equals its expansion over
/// intermediates, and (id (x) Delta) R = R13 R12.
CheckReport check_delta_property(const SigmaSet& sigma);

/// The q-Serre relations on W and on the coproduct module W (x) W.
CheckReport check_qserre(const Representation& rep);

/// The two nested-adjoint relations around the odd simple root; vacuous unless k >= 2 and l >= 2.
CheckReport check_extra_serre(const SigmaSet& sigma);

CheckReport check_qcom(const SigmaSet& sigma);
CheckReport check_appendix(const SigmaSet& sigma);
CheckReport check_path_independence(const SigmaSet& sigma);

/// rT = dagger(r) and rT = P r P.
CheckReport check_opposite(const RTensor& r, const RTensor& rT);

/// Relations between sigma operators that follow from the induction and
/// q-commutation relations, grouped into families common to all m, even m and odd m.
std::vector<Relation> appendix_relations(const SigmaSet& sigma);

/// Adjoint on sigma operators, with the conjugating weight eps_b - eps_a.
GradedMatrix sigma_adjoint(const SigmaSet& sigma, PairKey x, const GradedMatrix& X, int pX);

// ---------------------------------------------------------------------------
// Single-entry mutations for negative controls.

enum class Mutation { sign_flip, q_square, spurious };

/// Mutates the `which`-th eligible entry (row-major). sign_flip negates a
/// nonzero entry; q_square substitutes s -> s^2 and only counts entries it
/// changes; spurious sets a zero entry of the matrix's parity to 1. Throws
/// InvalidInput if there is no such entry.
GradedMatrix mutate(const GradedMatrix& X, Mutation kind, std::size_t which = 0, bool off_diagonal = true);

RTensor mutate(const RTensor& r, Mutation kind, std::size_t which = 0);

/// Mutates sigma(b, a).
SigmaSet mutate(const SigmaSet& s, PairKey pair, Mutation kind, std::size_t which = 0);

// ---------------------------------------------------------------------------

template <class S>
bool ReportBuilder::compare(const std::string& relation, const GradedMatrixT<S>& lhs, const GradedMatrixT<S>& rhs) {
  ++report_.relations_checked;
  auto pos = first_difference(lhs, rhs);
  if (!pos) return true;
  if (report_.passed) {
    report_.passed = false;
    auto text = [](const S& v) {
      if constexpr (std::is_same_v<S, Rational>) {
        return format_rational(v);
      } else {
        return v.to_string();
      }
    };
    report_.witness = Witness{relation, pos->first + 1, pos->second + 1, text(lhs.get(pos->first, pos->second)),
                              text(rhs.get(pos->first, pos->second))};
  }
  return false;
}

}  // namespace laxforge
