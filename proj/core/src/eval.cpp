#include <unordered_map>

#include "ltlwb/errors.hpp"
#include "ltlwb/kripke.hpp"

namespace ltlwb {

namespace {

struct Instr {
  Op op;
  int a = -1;
  int b = -1;
  std::string prop;
};

struct Program {
  std::vector<Instr> code;
  std::unordered_map<Formula, int, FormulaHash> index;

  int add(const Formula& f) {
    auto it = index.find(f);
    if (it != index.end()) return it->second;
    Instr in{f.op(), -1, -1, {}};
    if (f.op() == Op::prop) in.prop = f.name();
    if (f.arity() >= 1) in.a = add(f.lhs());
    if (f.arity() == 2) in.b = add(f.rhs());
    int id = static_cast<int>(code.size());
    code.push_back(std::move(in));
    index.emplace(f, id);
    return id;
  }
};

// Satisfaction of every instruction at every lasso position; succ(L-1) = loop.
std::vector<std::vector<char>> run(const Program& prog, const LassoWord& w) {
  const int L = w.length();
  const int loop = static_cast<int>(w.prefix.size());
  auto succ = [&](int i) { return i + 1 < L ? i + 1 : loop; };
  std::vector<std::vector<char>> val(prog.code.size(), std::vector<char>(L, 0));
  for (std::size_t k = 0; k < prog.code.size(); ++k) {
    const Instr& in = prog.code[k];
    auto& v = val[k];
    const std::vector<char>* a = in.a >= 0 ? &val[in.a] : nullptr;
    const std::vector<char>* b = in.b >= 0 ? &val[in.b] : nullptr;
    switch (in.op) {
      case Op::prop:
        for (int i = 0; i < L; ++i) v[i] = w.at(i).count(in.prop) > 0;
        break;
      case Op::top:
        for (int i = 0; i < L; ++i) v[i] = 1;
        break;
      case Op::bottom:
        break;
      case Op::neg:
        for (int i = 0; i < L; ++i) v[i] = !(*a)[i];
        break;
      case Op::conj:
        for (int i = 0; i < L; ++i) v[i] = (*a)[i] && (*b)[i];
        break;
      case Op::disj:
        for (int i = 0; i < L; ++i) v[i] = (*a)[i] || (*b)[i];
        break;
      case Op::implies:
        for (int i = 0; i < L; ++i) v[i] = !(*a)[i] || (*b)[i];
        break;
      case Op::next:
        for (int i = 0; i < L; ++i) v[i] = (*a)[succ(i)];
        break;
      case Op::finally:
      case Op::until: {
        // Least fixpoint of v = goal | (hold & X v).
        const auto& goal = in.op == Op::until ? *b : *a;
        for (int i = 0; i < L; ++i) v[i] = goal[i];
        for (bool changed = true; changed;) {
          changed = false;
          for (int i = L - 1; i >= 0; --i) {
            bool hold = in.op == Op::until ? (*a)[i] : true;
            if (!v[i] && hold && v[succ(i)]) {
              v[i] = 1;
              changed = true;
            }
          }
        }
        break;
      }
      case Op::globally: {
        // Greatest fixpoint of v = a & X v.
        for (int i = 0; i < L; ++i) v[i] = (*a)[i];
        for (bool changed = true; changed;) {
          changed = false;
          for (int i = L - 1; i >= 0; --i) {
            if (v[i] && !v[succ(i)]) {
              v[i] = 0;
              changed = true;
            }
          }
        }
        break;
      }
    }
  }
  return val;
}

}  // namespace

std::vector<bool> eval_positions(const LassoWord& w, const Formula& f) {
  if (w.cycle.empty()) throw Error("lasso cycle must be nonempty");
  Program prog;
  int root = prog.add(f);
  auto val = run(prog, w);
  return std::vector<bool>(val[root].begin(), val[root].end());
}

bool eval_on_word(const LassoWord& w, const Formula& f) { return eval_positions(w, f)[0]; }

bool eval_on_lasso(const KripkeStructure& s, const Lasso& l, const Formula& f) {
  if (!is_valid_lasso(s, l)) throw Error("invalid lasso");
  return eval_on_word(word_of(s, l), f);
}

}  // namespace ltlwb
