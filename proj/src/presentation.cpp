#include "artin/presentation.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

namespace artin {

namespace {

std::atomic<std::uint64_t> next_presentation_id{1};

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Classifies one connected component of the Coxeter graph (edges where m != 2).
bool component_is_finite(const Presentation& p, const std::vector<Gen>& comp) {
  const std::size_t n = comp.size();
  if (n <= 1) return true;
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edges = 0, heavy = 0;
  int heavy_label = 0;
  std::pair<std::size_t, std::size_t> heavy_edge{0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int m = p.bond(comp[i], comp[j]);
      if (m == 2) continue;
      if (m == kInfinity) return false;
      ++edges;
      adj[i].push_back(j);
      adj[j].push_back(i);
      if (m >= 4) {
        ++heavy;
        heavy_label = m;
        heavy_edge = {i, j};
      }
    }
  }
  if (n == 2) return true;  // I2(m)
  if (edges != n - 1) return false;  // finite Coxeter graphs are trees
  if (heavy > 1 || heavy_label >= 6) return false;

  std::size_t branch = n, branches = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 3) return false;
    if (adj[i].size() == 3) {
      branch = i;
      ++branches;
    }
  }
  if (branches > 1) return false;

  if (branches == 1) {
    if (heavy != 0) return false;
    // arm lengths p,q,r (vertices) must satisfy 1/(p+1) + 1/(q+1) + 1/(r+1) > 1
    std::vector<std::size_t> arms;
    for (std::size_t start : adj[branch]) {
      std::size_t len = 1, prev = branch, cur = start;
      while (adj[cur].size() == 2) {
        std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    const std::size_t a = arms[0] + 1, b = arms[1] + 1, c = arms[2] + 1;
    return a * b + b * c + a * c > a * b * c;
  }

  // path
  if (heavy == 0) return true;  // A_n
  auto is_end = [&](std::size_t v) { return adj[v].size() == 1; };
  const bool at_end = is_end(heavy_edge.first) || is_end(heavy_edge.second);
  if (heavy_label == 4) {
    if (at_end) return true;  // B_n
    return n == 4;            // F4: heavy edge in the middle of a 4-path
  }
  return at_end && (n == 3 || n == 4);  // H3, H4
}

}  // namespace

Presentation::Presentation(std::string name, std::vector<std::string> generators)
    : name_(std::move(name)), generators_(std::move(generators)), id_(next_presentation_id++) {
  if (generators_.size() > 32) throw InputError("at most 32 generators are supported");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.empty()) throw InputError("empty generator token");
    if (g == "1" || g.find_first_of(".@{},^") != std::string::npos || g.find_first_of(" \t") != std::string::npos)
      throw InputError("generator token '" + g + "' is reserved or contains a reserved character");
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[j] == g) throw InputError("duplicate generator '" + g + "'");
    if (g.size() != 1) compact_ = false;
  }
  matrix_.assign(rank() * rank(), 2);
}

void Presentation::set_bond(Gen s, Gen t, int m) {
  if (s >= rank() || t >= rank()) throw InputError("bond references an unknown generator");
  if (s == t) throw InputError("bond between a generator and itself");
  if (m != kInfinity && m < 2) throw InputError("bond value must be >= 2 or inf");
  matrix_[static_cast<std::size_t>(s) * rank() + t] = m;
  matrix_[static_cast<std::size_t>(t) * rank() + s] = m;
}

std::optional<Gen> Presentation::find(std::string_view token) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == token) return static_cast<Gen>(i);
  return std::nullopt;
}

PresentationPtr parse_presentation(std::string_view text) {
  std::string name;
  std::optional<Presentation> pres;
  std::vector<std::pair<std::pair<Gen, Gen>, int>> declared;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (toks[0] == "presentation") {
      if (toks.size() != 2 || !name.empty()) throw InputError("malformed presentation line" + where);
      name = toks[1];
    } else if (toks[0] == "generators") {
      if (name.empty()) throw InputError("'generators' before 'presentation'" + where);
      if (pres) throw InputError("repeated 'generators' line" + where);
      pres.emplace(name, std::vector<std::string>(toks.begin() + 1, toks.end()));
    } else if (toks[0] == "bond") {
      if (!pres) throw InputError("'bond' before 'generators'" + where);
      if (toks.size() != 4) throw InputError("bond needs two generators and a value" + where);
      auto s = pres->find(toks[1]);
      auto t = pres->find(toks[2]);
      if (!s || !t) throw InputError("bond references unknown generator" + where);
      int m;
      if (toks[3] == "inf") {
        m = kInfinity;
      } else {
        try {
          std::size_t used = 0;
          m = std::stoi(toks[3], &used);
          if (used != toks[3].size()) throw InputError("bad bond value" + where);
        } catch (const std::logic_error&) {
          throw InputError("bad bond value '" + toks[3] + "'" + where);
        }
        if (m < 2) throw InputError("bond value < 2" + where);
      }
      for (const auto& [pair, old] : declared) {
        if ((pair == std::pair{*s, *t} || pair == std::pair{*t, *s}) && old != m)
          throw InputError("conflicting bond declarations for " + toks[1] + "," + toks[2] + where);
      }
      declared.push_back({{*s, *t}, m});
      pres->set_bond(*s, *t, m);
    } else {
      throw InputError("unknown directive '" + toks[0] + "'" + where);
    }
  }
  if (!pres) throw InputError("presentation has no 'generators' line");
  return std::make_shared<const Presentation>(std::move(*pres));
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "presentation " << p.name() << "\ngenerators";
  for (const auto& g : p.generators()) out << ' ' << g;
  out << '\n';
  for (Gen s = 0; s < p.rank(); ++s)
    for (Gen t = s + 1; t < p.rank(); ++t) {
      const int m = p.bond(s, t);
      if (m == 2) continue;
      out << "bond " << p.generator(s) << ' ' << p.generator(t) << ' '
          << (m == kInfinity ? std::string("inf") : std::to_string(m)) << '\n';
    }
  return out.str();
}

bool is_spherical(const Presentation& p, GenSet t) {
  if (!t.subset_of(p.all())) throw InputError("subset is not contained in the generators");
  auto members = t.members();
  std::vector<bool> seen(p.rank(), false);
  for (Gen start : members) {
    if (seen[start]) continue;
    std::vector<Gen> comp{start};
    seen[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (Gen other : members)
        if (!seen[other] && p.bond(comp[k], other) != 2) {
          seen[other] = true;
          comp.push_back(other);
        }
    if (!component_is_finite(p, comp)) return false;
  }
  return true;
}

std::optional<GenSet> fc_obstruction(const Presentation& p) {
  const std::uint32_t limit = p.all().bits();
  for (std::uint32_t bits = 1; bits != 0 && bits <= limit; ++bits) {
    GenSet t(bits);
    bool finite_bonds = true;
    auto m = t.members();
    for (std::size_t i = 0; i < m.size() && finite_bonds; ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (p.infinite(m[i], m[j])) {
          finite_bonds = false;
          break;
        }
    if (finite_bonds && !is_spherical(p, t)) return t;
  }
  return std::nullopt;
}

bool is_fc(const Presentation& p) { return !fc_obstruction(p).has_value(); }

std::vector<GenSet> spherical_subsets(const Presentation& p) {
  std::vector<GenSet> out;
  const std::uint32_t limit = p.all().bits();
  for (std::uint64_t bits = 0; bits <= limit; ++bits) {
    GenSet t(static_cast<std::uint32_t>(bits));
    if (is_spherical(p, t)) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Word parse_word(const Presentation& p, std::string_view text) {
  Word out;
  std::string cleaned(text);
  std::replace(cleaned.begin(), cleaned.end(), '.', ' ');
  for (const auto& tok : split_ws(cleaned)) {
    if (tok == "1") continue;
    if (auto g = p.find(tok)) {
      out.push_back(*g);
      continue;
    }
    // compact presentations accept run-together tokens such as "sts"
    if (p.compact_tokens()) {
      for (char c : tok) {
        auto g = p.find(std::string_view(&c, 1));
        if (!g) throw InputError("unknown generator '" + std::string(1, c) + "' in '" + tok + "'");
        out.push_back(*g);
      }
      continue;
    }
    throw InputError("unknown generator '" + tok + "'");
  }
  return out;
}

std::string format_word(const Presentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !p.compact_tokens()) out += '.';
    out += p.generator(w[i]);
  }
  return out;
}

GenSet parse_genset(const Presentation& p, std::string_view text) {
  std::string cleaned(text);
  for (char& c : cleaned)
    if (c == '{' || c == '}' || c == ',') c = ' ';
  GenSet out;
  for (const auto& tok : split_ws(cleaned)) {
    auto g = p.find(tok);
    if (!g) throw InputError("unknown generator '" + tok + "' in subset");
    out = out.with(*g);
  }
  return out;
}

std::string format_genset(const Presentation& p, GenSet s) {
  std::string out = "{";
  bool first = true;
  for (Gen g : s.members()) {
    if (!first) out += ',';
    out += p.generator(g);
    first = false;
  }
  return out + "}";
}

}  // namespace artin
