#include "seqcalc/herbrand.hpp"

namespace seqcalc {

namespace {

class Herbrandizer {
 public:
  explicit Herbrandizer(const Sequent& s) : names_(s.symbols()) {}

  // Bound variables of `f` have already been replaced by named terms.
  Formula run(const Formula& f, bool positive) {
    switch (f.kind()) {
      case FormulaKind::And:
        return Formula::conj(run(f.left(), positive), run(f.right(), positive));
      case FormulaKind::Or:
        return Formula::disj(run(f.left(), positive), run(f.right(), positive));
      case FormulaKind::Imp:
        return Formula::imp(run(f.left(), !positive), run(f.right(), positive));
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        bool strong = (f.kind() == FormulaKind::Forall) == positive;
        if (strong) {
          std::string h = names_.fresh("h");
          functions_.push_back(h);
          std::vector<Term> args;
          for (const auto& w : weak_) args.push_back(Term::var(w));
          return run(instantiate(f.body(), Term::app(h, std::move(args))), positive);
        }
        std::string w = "%w" + std::to_string(weak_counter_++);
        weak_.push_back(w);
        Formula body = run(instantiate(f.body(), Term::var(w)), positive);
        weak_.pop_back();
        Formula abs = abstract(body, w);
        return f.kind() == FormulaKind::Forall ? Formula::forall(f.binder_hint(), abs)
                                               : Formula::exists(f.binder_hint(), abs);
      }
      default:
        return f;
    }
  }

  std::vector<std::string> functions_;

 private:
  NameSupply names_;
  std::vector<std::string> weak_;
  int weak_counter_ = 0;
};

}  // namespace

HerbrandResult herbrandize_with_info(const Sequent& s) {
  Herbrandizer h(s);
  std::vector<Formula> ante, succ;
  for (const auto& f : s.ante()) ante.push_back(h.run(f, false));
  for (const auto& f : s.succ()) succ.push_back(h.run(f, true));
  return HerbrandResult{Sequent(std::move(ante), std::move(succ)), h.functions_};
}

Sequent herbrandize(const Sequent& s) { return herbrandize_with_info(s).sequent; }

}  // namespace seqcalc
