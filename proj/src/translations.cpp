#include "afenum/translations.hpp"

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <unordered_set>

#include "afenum/errors.hpp"

namespace afenum {
namespace {

// Appends primes until `base` no longer collides with an existing label.
std::string fresh_label(std::string base, std::unordered_set<std::string>& used) {
  while (used.count(base)) base += '\'';
  used.insert(base);
  return base;
}

TranslationWitness identity_witness(const Framework& af) {
  TranslationWitness w{af, af, {}, {}, {}, false};
  w.role.assign(af.size(), VertexRole::Original);
  w.origin.resize(af.size());
  for (std::size_t i = 0; i < af.size(); ++i) w.origin[i] = static_cast<Vertex>(i);
  w.duplicate.assign(af.size(), -1);
  return w;
}

}  // namespace

TranslationWitness loopless_translate(const Framework& af, LooplessMode mode) {
  if (mode == LooplessMode::OnlyIfLoops && !af.has_self_loops()) return identity_witness(af);

  const auto n = static_cast<Vertex>(af.size());
  std::vector<std::string> labels = af.labels();
  std::unordered_set<std::string> used(labels.begin(), labels.end());
  const Vertex l1 = n, l2 = n + 1, l3 = n + 2;
  labels.push_back(fresh_label("l1", used));
  labels.push_back(fresh_label("l2", used));
  labels.push_back(fresh_label("l3", used));

  std::vector<Arc> arcs;
  for (const Arc& a : af.arcs())
    if (a.from != a.to) arcs.push_back(a);
  af.self_loopers().for_each([&](Vertex v) { arcs.push_back({l1, v}); });
  arcs.insert(arcs.end(), {{l1, l2}, {l2, l3}, {l3, l1}});

  TranslationWitness w = identity_witness(af);
  w.target = Framework(std::move(labels), arcs);
  w.role.insert(w.role.end(), 3, VertexRole::LoopGuard);
  w.origin.insert(w.origin.end(), 3, -1);
  w.loop_guards_added = true;
  return w;
}

TranslationWitness oriented_translate(const Framework& af, LooplessMode mode) {
  TranslationWitness w = loopless_translate(af, mode);
  const Framework mid = std::move(w.target);
  const std::size_t n = mid.size();

  std::vector<std::string> labels = mid.labels();
  std::unordered_set<std::string> used(labels.begin(), labels.end());
  std::vector<Vertex> twin(n, -1);
  mid.two_cycle_members().for_each([&](Vertex v) {
    twin[static_cast<std::size_t>(v)] = static_cast<Vertex>(labels.size());
    labels.push_back(fresh_label(mid.label(v) + "'", used));
    w.role.push_back(VertexRole::Duplicate);
    w.origin.push_back(w.origin[static_cast<std::size_t>(v)]);
  });

  std::vector<Arc> arcs;
  for (const Arc& a : mid.arcs()) {
    const Vertex i = a.from, j = a.to;
    const Vertex wi = twin[static_cast<std::size_t>(i)], wj = twin[static_cast<std::size_t>(j)];
    if (mid.attacks(j, i)) {
      // Each 2-cycle is handled once, from its lower endpoint.
      if (i < j) arcs.insert(arcs.end(), {{i, j}, {j, wi}, {wi, wj}, {wj, i}});
      continue;
    }
    arcs.push_back({i, j});
    if (wj >= 0) arcs.push_back({i, wj});
    if (wi >= 0) arcs.push_back({wi, j});
    if (wi >= 0 && wj >= 0) arcs.push_back({wi, wj});
  }

  for (std::size_t v = 0; v < af.size(); ++v) w.duplicate[v] = twin[v];
  w.target = Framework(std::move(labels), arcs);
  return w;
}

Extension apply_psi(const TranslationWitness& w, const Extension& s) {
  w.source.require_valid(s);
  Extension t(w.target.size());
  s.for_each([&](Vertex v) {
    t.insert(v);
    if (const Vertex d = w.duplicate[static_cast<std::size_t>(v)]; d >= 0) t.insert(d);
  });
  return t;
}

Extension invert_psi(const TranslationWitness& w, const Extension& t) {
  w.target.require_valid(t);
  Extension s(w.source.size());
  t.for_each([&](Vertex x) {
    switch (w.role[static_cast<std::size_t>(x)]) {
      case VertexRole::LoopGuard:
        throw ConsistencyError("guard vertex '" + w.target.label(x) + "' cannot appear in a mapped extension");
      case VertexRole::Duplicate:
        if (!t.contains(w.origin[static_cast<std::size_t>(x)]))
          throw ConsistencyError("'" + w.target.label(x) + "' present without its original");
        break;
      case VertexRole::Original:
        if (const Vertex d = w.duplicate[static_cast<std::size_t>(x)]; d >= 0 && !t.contains(d))
          throw ConsistencyError("'" + w.target.label(x) + "' present without its duplicate");
        s.insert(x);
        break;
    }
  });
  return s;
}

void CnfFormula::validate() const {
  if (variables < 0) throw InputError("negative variable count");
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    if (clauses[c].empty()) throw InputError("clause " + std::to_string(c + 1) + " is empty");
    for (int lit : clauses[c])
      if (lit == 0 || std::abs(lit) > variables)
        throw InputError("clause " + std::to_string(c + 1) + " has out-of-range literal " + std::to_string(lit));
  }
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula cnf;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> current;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == 'c') continue;
    if (tok == "%") break;  // SATLIB trailer
    if (tok == "p") {
      std::string fmt;
      long long vars = -1, count = -1;
      if (header || !(ls >> fmt >> vars >> count) || fmt != "cnf" || vars < 0 || count < 0)
        throw ParseError("bad problem line", line_no);
      header = true;
      cnf.variables = static_cast<int>(vars);
      declared = static_cast<std::size_t>(count);
      continue;
    }
    if (!header) throw ParseError("clause before the 'p cnf' line", line_no);
    do {
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw ParseError("bad literal '" + tok + "'", line_no);
      if (lit == 0) {
        if (current.empty()) throw ParseError("empty clause", line_no);
        cnf.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (std::labs(lit) > cnf.variables) throw ParseError("literal " + tok + " exceeds variable count", line_no);
        current.push_back(static_cast<int>(lit));
      }
    } while (ls >> tok);
  }
  if (!header) throw ParseError("missing 'p cnf' line", 0);
  if (!current.empty()) cnf.clauses.push_back(std::move(current));
  if (cnf.clauses.size() != declared)
    throw ParseError("header declares " + std::to_string(declared) + " clauses, found " +
                         std::to_string(cnf.clauses.size()),
                     0);
  return cnf;
}

std::string write_dimacs(const CnfFormula& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.variables << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

Framework extended_translate(const CnfFormula& cnf) {
  cnf.validate();
  const int n = cnf.variables;
  const int m = static_cast<int>(cnf.clauses.size());
  const Vertex phi = 0;
  auto clause = [](int j) -> Vertex { return 1 + j; };  // j in [0, m+n)
  const Vertex z0 = 1 + m + n, nz0 = z0 + n, a0 = nz0 + n;
  auto literal = [&](int lit) -> Vertex { return lit > 0 ? z0 + lit - 1 : nz0 - lit - 1; };

  std::vector<std::string> labels{"phi"};
  for (int j = 1; j <= m + n; ++j) labels.push_back("c" + std::to_string(j));
  for (int i = 1; i <= n; ++i) labels.push_back("z" + std::to_string(i));
  for (int i = 1; i <= n; ++i) labels.push_back("nz" + std::to_string(i));
  labels.insert(labels.end(), {"A0", "A1", "A2"});

  std::vector<Arc> arcs;
  for (int j = 0; j < m + n; ++j) arcs.push_back({clause(j), phi});
  for (int i = 1; i <= n; ++i) arcs.insert(arcs.end(), {{literal(i), literal(-i)}, {literal(-i), literal(i)}});
  for (int j = 0; j < m; ++j)
    for (int lit : cnf.clauses[static_cast<std::size_t>(j)]) arcs.push_back({literal(lit), clause(j)});
  for (int i = 1; i <= n; ++i)
    arcs.insert(arcs.end(), {{literal(i), clause(m + i - 1)}, {literal(-i), clause(m + i - 1)}});
  arcs.push_back({phi, a0});
  arcs.insert(arcs.end(), {{a0, a0 + 1}, {a0 + 1, a0 + 2}, {a0 + 2, a0}});
  for (int i = 1; i <= n; ++i) arcs.insert(arcs.end(), {{a0, literal(i)}, {a0, literal(-i)}});
  return Framework(std::move(labels), arcs);
}

std::size_t count_models(const CnfFormula& cnf) {
  cnf.validate();
  if (cnf.variables > 30) throw ResourceLimitError("model counting limited to 30 variables");
  std::size_t models = 0;
  const std::uint64_t total = std::uint64_t{1} << cnf.variables;
  for (std::uint64_t a = 0; a < total; ++a) {
    bool sat = true;
    for (const auto& clause : cnf.clauses) {
      bool hit = false;
      for (int lit : clause) {
        const bool value = (a >> (std::abs(lit) - 1)) & 1u;
        if ((lit > 0) == value) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        sat = false;
        break;
      }
    }
    if (sat) ++models;
  }
  return models;
}

}  // namespace afenum
