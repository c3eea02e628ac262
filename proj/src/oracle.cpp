#include "cfl/oracle.hpp"

#include <algorithm>
#include <map>

#include "cfl/errors.hpp"

namespace cfl {

bool is_propositional(const FormulaPtr& f) {
  switch (f->kind()) {
    case FormulaKind::Atom:
      return f->terms().empty();
    case FormulaKind::Not:
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      for (const auto& s : f->subs())
        if (!is_propositional(s)) return false;
      return true;
    default:
      return false;
  }
}

namespace {

void collect_atoms(const FormulaPtr& f, std::map<std::string, size_t>& atoms) {
  if (f->kind() == FormulaKind::Atom) {
    if (f->rel() != "false") atoms.try_emplace(f->rel(), atoms.size());
    return;
  }
  for (const auto& s : f->subs()) collect_atoms(s, atoms);
}

bool eval(const FormulaPtr& f, uint32_t assignment, const std::map<std::string, size_t>& atoms) {
  switch (f->kind()) {
    case FormulaKind::Atom: {
      if (f->rel() == "false") return false;
      return assignment >> atoms.at(f->rel()) & 1u;
    }
    case FormulaKind::Not: return !eval(f->subs()[0], assignment, atoms);
    case FormulaKind::And:
      return eval(f->subs()[0], assignment, atoms) && eval(f->subs()[1], assignment, atoms);
    case FormulaKind::Or:
      return eval(f->subs()[0], assignment, atoms) || eval(f->subs()[1], assignment, atoms);
    case FormulaKind::Implies:
      return !eval(f->subs()[0], assignment, atoms) || eval(f->subs()[1], assignment, atoms);
    case FormulaKind::Iff:
      return eval(f->subs()[0], assignment, atoms) == eval(f->subs()[1], assignment, atoms);
    default:
      throw OracleError("oracle: formula outside the propositional fragment");
  }
}

// Truth function of f as a bit vector over all 2^k assignments.
struct TruthTable {
  std::vector<uint64_t> bits;

  static TruthTable of(const FormulaPtr& f, const std::map<std::string, size_t>& atoms) {
    size_t count = size_t(1) << atoms.size();
    TruthTable t;
    t.bits.assign((count + 63) / 64, 0);
    for (size_t a = 0; a < count; ++a)
      if (eval(f, (uint32_t)a, atoms)) t.bits[a >> 6] |= uint64_t(1) << (a & 63);
    return t;
  }

  static TruthTable all_true(size_t atom_count) {
    size_t count = size_t(1) << atom_count;
    TruthTable t;
    t.bits.assign((count + 63) / 64, ~uint64_t(0));
    size_t tail = count & 63;
    if (tail) t.bits.back() = (uint64_t(1) << tail) - 1;
    return t;
  }

  void intersect(const TruthTable& o) {
    for (size_t i = 0; i < bits.size(); ++i) bits[i] &= o.bits[i];
  }

  bool any() const {
    for (uint64_t w : bits)
      if (w) return true;
    return false;
  }

  // this ⊆ o, i.e. every satisfying assignment of this satisfies o.
  bool subset_of(const TruthTable& o) const {
    for (size_t i = 0; i < bits.size(); ++i)
      if (bits[i] & ~o.bits[i]) return false;
    return true;
  }
};

std::map<std::string, size_t> atom_index(const std::vector<FormulaPtr>& gamma,
                                         const std::vector<FormulaPtr>& extra) {
  std::map<std::string, size_t> atoms;
  auto check = [&](const FormulaPtr& f) {
    if (!is_propositional(f))
      throw OracleError("oracle: formula outside the propositional fragment");
    collect_atoms(f, atoms);
  };
  for (const auto& f : gamma) check(f);
  for (const auto& f : extra) check(f);
  if (atoms.size() > 16) throw OracleError("oracle: more than 16 distinct atoms");
  return atoms;
}

}  // namespace

bool oracle_entails(const std::vector<FormulaPtr>& gamma, const FormulaPtr& f) {
  auto atoms = atom_index(gamma, {f});
  TruthTable models = TruthTable::all_true(atoms.size());
  for (const auto& g : gamma) models.intersect(TruthTable::of(g, atoms));
  return models.subset_of(TruthTable::of(f, atoms));
}

bool oracle_consistent(const std::vector<FormulaPtr>& phis) {
  auto atoms = atom_index(phis, {});
  TruthTable models = TruthTable::all_true(atoms.size());
  for (const auto& g : phis) models.intersect(TruthTable::of(g, atoms));
  return models.any();
}

OracleVerdict oracle_counterfactual(const std::vector<FormulaPtr>& gamma,
                                    const FormulaPtr& phi, const FormulaPtr& psi) {
  if (gamma.size() > 12) throw OracleError("oracle: more than 12 premises");
  auto atoms = atom_index(gamma, {phi, psi});

  std::vector<TruthTable> premise(gamma.size());
  for (size_t i = 0; i < gamma.size(); ++i) premise[i] = TruthTable::of(gamma[i], atoms);
  TruthTable phi_t = TruthTable::of(phi, atoms);
  TruthTable psi_t = TruthTable::of(psi, atoms);

  OracleVerdict v;
  if (!phi_t.any()) {
    v.entailed = true;
    v.inconsistent_antecedent = true;
    return v;
  }

  // Small-first, lexicographic within one cardinality: first witness wins.
  for (size_t k = 0; k <= gamma.size(); ++k) {
    std::vector<int> comb(k);
    for (size_t i = 0; i < k; ++i) comb[i] = (int)i;
    while (true) {
      TruthTable models = phi_t;
      for (int i : comb) models.intersect(premise[(size_t)i]);
      if (models.any() && models.subset_of(psi_t)) {
        v.entailed = true;
        v.witness = std::vector<size_t>(comb.begin(), comb.end());
        return v;
      }
      // next combination
      int i = (int)k - 1;
      while (i >= 0 && comb[(size_t)i] == (int)gamma.size() - (int)k + i) --i;
      if (i < 0) break;
      ++comb[(size_t)i];
      for (size_t j = (size_t)i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (k == gamma.size()) break;
  }
  return v;
}

}  // namespace cfl
