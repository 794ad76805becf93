#include "cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "artin/deligne.hpp"
#include "artin/salvetti.hpp"
#include "artin/suites.hpp"
#include "artin/workspace.hpp"

namespace artin {

namespace {

struct Globals {
  std::string pres;
  Options options;
  std::string format = "human";
  std::string dot;
  std::string side = "left";
  std::vector<std::string> loads;
  bool controls = false;
  bool no_stock = false;
};

class Session {
 public:
  Session(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

  Workspace& ws() {
    if (!loaded_) {
      if (!g_.no_stock) ws_ = stock_workspace(g_.controls);
      for (const auto& path : g_.loads) ws_.load_file(path);
      loaded_ = true;
    }
    return ws_;
  }

  PresentationPtr pres() {
    if (g_.pres.empty()) throw InputError("this command needs a presentation: -p <name>");
    return ws().presentation(g_.pres);
  }

  MonoidElement positive(const std::string& text) { return MonoidElement(pres(), parse_word(*pres(), text)); }

  const GeneratorMap& map(const std::string& name) { return ws().map(name); }

  int report(const Report& r) {
    out_ << (g_.format == "records" ? render_records(r) : render_human(r));
    return r.ok() ? 0 : 1;
  }

  void write_dot(const std::string& text) {
    if (g_.dot.empty()) return;
    std::ofstream f(g_.dot, std::ios::binary);
    if (!f) throw InputError("cannot write " + g_.dot);
    f << text;
  }

  const Globals& globals() const { return g_; }
  std::ostream& out() { return out_; }

 private:
  const Globals& g_;
  std::ostream& out_;
  Workspace ws_;
  bool loaded_ = false;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void add_monoid(CLI::App& app, std::function<int(Session&)>& action) {
  auto* monoid = app.add_subcommand("monoid", "positive monoid computations (-p selects the presentation)");
  monoid->require_subcommand(1);
  auto one_word = [&](const char* name, const char* help, std::function<int(Session&, const std::string&)> f) {
    auto* cmd = monoid->add_subcommand(name, help);
    auto word = std::make_shared<std::string>();
    cmd->add_option("word", *word, "positive word")->required();
    cmd->callback([&action, word, f] { action = [word, f](Session& s) { return f(s, *word); }; });
  };
  auto two_words = [&](const char* name, const char* help,
                       std::function<int(Session&, const std::string&, const std::string&)> f) {
    auto* cmd = monoid->add_subcommand(name, help);
    auto u = std::make_shared<std::string>(), v = std::make_shared<std::string>();
    cmd->add_option("u", *u, "positive word")->required();
    cmd->add_option("v", *v, "positive word")->required();
    cmd->callback([&action, u, v, f] { action = [u, v, f](Session& s) { return f(s, *u, *v); }; });
  };

  one_word("nf", "greedy normal form, factors separated by ' . '", [](Session& s, const std::string& w) {
    s.out() << format_normal_form(normal_form(s.positive(w))) << '\n';
    return 0;
  });
  one_word("alpha", "greatest square-free left divisor", [](Session& s, const std::string& w) {
    s.out() << alpha(s.positive(w)).str() << '\n';
    return 0;
  });
  one_word("squarefree", "whether the element is square-free", [](Session& s, const std::string& w) {
    s.out() << yes_no(is_square_free(s.positive(w))) << '\n';
    return 0;
  });
  one_word("delta", "Δ_T for a spherical subset T, e.g. {s,t}", [](Session& s, const std::string& t) {
    s.out() << delta(s.pres(), parse_genset(*s.pres(), t)).str() << '\n';
    return 0;
  });
  two_words("eq", "equality in the monoid", [](Session& s, const std::string& u, const std::string& v) {
    s.out() << (s.positive(u) == s.positive(v) ? "equal" : "different") << '\n';
    return 0;
  });
  two_words("divides", "whether u divides v (--side left|right)",
            [](Session& s, const std::string& u, const std::string& v) {
              const bool left = s.globals().side == "left";
              const auto a = s.positive(u), b = s.positive(v);
              s.out() << yes_no(left ? left_divides(a, b) : right_divides(a, b)) << '\n';
              return 0;
            });
  two_words("gcd", "greatest common divisor (--side left|right)",
            [](Session& s, const std::string& u, const std::string& v) {
              const bool left = s.globals().side == "left";
              const auto a = s.positive(u), b = s.positive(v);
              s.out() << (left ? left_gcd(a, b) : right_gcd(a, b)).str() << '\n';
              return 0;
            });
  two_words("lcm", "least common multiple (--side left|right, --cutoff B)",
            [](Session& s, const std::string& u, const std::string& v) {
              const bool left = s.globals().side == "left";
              const auto a = s.positive(u), b = s.positive(v);
              const std::size_t cutoff = s.globals().options.cutoff;
              s.out() << (left ? left_lcm(a, b, cutoff) : right_lcm(a, b, cutoff)).str() << '\n';
              return 0;
            });
}

void add_hom(CLI::App& app, std::function<int(Session&)>& action) {
  auto* hom = app.add_subcommand("hom", "generator maps and LCM-homomorphisms");
  hom->require_subcommand(1);

  auto* check = hom->add_subcommand("check", "axioms L0-L3 with witnesses");
  auto name = std::make_shared<std::string>();
  check->add_option("map", *name, "map name")->required();
  check->callback([&action, name] {
    action = [name](Session& s) {
      const LcmHom h(s.map(*name));
      const int code = h.usable() || h.map().substitution ? 0 : 1;
      if (s.globals().format == "records") {
        Report r;
        for (const AxiomCheck& a : h.report().entries) {
          const Status st = a.verdict == Verdict::Pass   ? Status::Pass
                            : a.verdict == Verdict::Fail ? Status::Fail
                                                         : Status::Skipped;
          r.add({*name, a.axiom, st, 1, a.witness.empty() ? verdict_name(a.verdict) : a.witness});
        }
        s.out() << render_records(r);
        return code;
      }
      for (const AxiomCheck& a : h.report().entries) {
        s.out() << a.axiom << ' ' << verdict_name(a.verdict);
        if (!a.witness.empty()) s.out() << "  " << a.witness;
        s.out() << '\n';
      }
      return code;
    };
  });

  auto* mw = hom->add_subcommand("map-word", "image of a word (positive, or signed with x^-1)");
  auto mname = std::make_shared<std::string>(), word = std::make_shared<std::string>();
  mw->add_option("map", *mname, "map name")->required();
  mw->add_option("word", *word, "source word")->required();
  mw->callback([&action, mname, word] {
    action = [mname, word](Session& s) {
      const GeneratorMap& m = s.map(*mname);
      if (word->find('^') != std::string::npos)
        s.out() << map_group(m, parse_group_word(m.source, *word)).str() << '\n';
      else
        s.out() << map_positive(m, MonoidElement(m.source, parse_word(*m.source, *word))).str() << '\n';
      return 0;
    };
  });

  auto* verify = hom->add_subcommand("verify", "run one property check over bounded enumerations");
  auto kind = std::make_shared<std::string>(), vname = std::make_shared<std::string>();
  verify->add_option("property", *kind, "nf|lattice|divisibility|fractions|coxeter|lemred|qf")
      ->required()
      ->check(CLI::IsMember({"nf", "lattice", "divisibility", "fractions", "coxeter", "lemred", "qf"}));
  verify->add_option("map", *vname, "map name")->required();
  verify->callback([&action, kind, vname] {
    action = [kind, vname](Session& s) {
      const GeneratorMap& m = s.map(*vname);
      const LcmHom h(m);
      const Options& o = s.globals().options;
      const auto bound = static_cast<std::size_t>(o.bound);
      Report r;
      if (*kind == "nf") r.add(check_normal_forms(m, bound));
      if (*kind == "lattice") r.add(check_lattice(h, bound, o.cutoff));
      if (*kind == "divisibility") r.add(check_divisibility(h, bound));
      if (*kind == "fractions") r.add(check_fractions(h, 50));
      if (*kind == "coxeter") r.add(check_coxeter_injective(h, bound));
      if (*kind == "lemred") r.add(check_lemred(h, o.bound));
      if (*kind == "qf") r.add(check_qf_injective(m, bound));
      return s.report(r);
    };
  });
}

void add_deligne(CLI::App& app, std::function<int(Session&)>& action) {
  auto* del = app.add_subcommand("deligne", "Deligne complex of an FC presentation; vertices are word@{X}");
  del->require_subcommand(1);

  auto* ball = del->add_subcommand("ball", "vertices within --radius moves of 1@{}");
  ball->callback([&action] {
    action = [](Session& s) {
      const Ball b(s.pres(), s.globals().options.radius);
      for (std::size_t i = 0; i < b.size(); ++i) s.out() << b.depth(i) << ' ' << b.vertices()[i].str() << '\n';
      s.out() << b.size() << " vertices, " << b.edges().size() << " edges\n";
      s.write_dot(ball_dot(b));
      return 0;
    };
  });

  auto* ncp = del->add_subcommand("ncp", "normal cube path between two vertices");
  auto x = std::make_shared<std::string>(), y = std::make_shared<std::string>();
  ncp->add_option("from", *x, "vertex")->required();
  ncp->add_option("to", *y, "vertex")->required();
  ncp->callback([&action, x, y] {
    action = [x, y](Session& s) {
      const PresentationPtr p = s.pres();
      const Vertex a = parse_vertex(p, *x), b = parse_vertex(p, *y);
      const Ball ball(p, {a, b}, s.globals().options.radius);
      const CubePath path = normal_cube_path(ball, a, b);
      s.out() << format_path(path) << '\n';
      for (std::size_t i = 1; i < path.size(); ++i) s.out() << "  C" << i << " = " << cube_span(path[i - 1], path[i])->str() << '\n';
      s.write_dot(cube_path_dot(path));
      return 0;
    };
  });

  auto* proccn = del->add_subcommand("verify-proccn", "image of a normal cube path is the normal cube path");
  auto pm = std::make_shared<std::string>(), px = std::make_shared<std::string>(), py = std::make_shared<std::string>();
  proccn->add_option("map", *pm, "map name")->required();
  proccn->add_option("from", *px, "source vertex")->required();
  proccn->add_option("to", *py, "source vertex")->required();
  proccn->callback([&action, pm, px, py] {
    action = [pm, px, py](Session& s) {
      const LcmHom h(s.map(*pm));
      const PresentationPtr src = h.map().source;
      const Vertex a = parse_vertex(src, *px), b = parse_vertex(src, *py);
      const Ball ball(src, {a, b}, s.globals().options.radius);
      const ProccnResult r = verify_proccn(h, ball, a, b, 1);
      s.out() << "source " << format_path(r.source) << '\n';
      s.out() << "image  " << format_path(r.image) << '\n';
      s.out() << (r.ok ? "ok" : "FAIL  " + r.detail) << '\n';
      s.write_dot(cube_path_dot(r.image));
      return r.ok ? 0 : 1;
    };
  });

  auto* inj = del->add_subcommand("verify-inj", "φ injective on words of length <= --bound, Φ on vertices");
  auto im = std::make_shared<std::string>();
  inj->add_option("map", *im, "map name")->required();
  inj->callback([&action, im] {
    action = [im](Session& s) {
      const LcmHom h(s.map(*im));
      Report r;
      r.add(check_group_injective(h, s.globals().options.bound));
      r.add(check_vertex_injective(h, s.globals().options.radius));
      return s.report(r);
    };
  });
}

void add_salvetti(CLI::App& app, std::function<int(Session&)>& action) {
  auto* sal = app.add_subcommand("salvetti", "Salvetti poset of spherical presentations");
  sal->require_subcommand(1);
  auto* check = sal->add_subcommand("check", "partial order on both sides, strict preservation by the map");
  auto name = std::make_shared<std::string>();
  check->add_option("map", *name, "map name")->required();
  check->callback([&action, name] {
    action = [name](Session& s) {
      const LcmHom h(s.map(*name));
      Report r;
      r.add(check_salvetti_order(h.map().source));
      r.add(check_salvetti_order(h.map().target));
      r.add(check_salvetti_map(h));
      return s.report(r);
    };
  });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  std::function<int(Session&)> action;

  CLI::App app{"Artin-Tits monoids, LCM-homomorphisms and Deligne complexes", "artintool"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("-p,--presentation", g.pres, "presentation name");
  app.add_option("--cutoff", g.options.cutoff, "lcm search cutoff B")->capture_default_str();
  app.add_option("-r,--radius", g.options.radius, "ball radius R")->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("-L,--bound", g.options.bound, "word length bound L")->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--format", g.format, "human|records")->capture_default_str()->check(CLI::IsMember({"human", "records"}));
  app.add_option("--dot", g.dot, "write a DOT graph to this file");
  app.add_option("--side", g.side, "left|right")->capture_default_str()->check(CLI::IsMember({"left", "right"}));
  app.add_option("--load", g.loads, "presentation or map file (repeatable)");
  app.add_flag("--controls", g.controls, "add the negative-control presentations and maps");
  app.add_flag("--no-stock", g.no_stock, "start from an empty workspace");

  add_monoid(app, action);
  add_hom(app, action);
  add_deligne(app, action);
  add_salvetti(app, action);
  auto* all = app.add_subcommand("verify-all", "every check over the workspace, as a scoreboard");
  all->callback([&action] {
    action = [](Session& s) { return s.report(verify_all(s.ws(), s.globals().options)); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    // CLI11 reports a missing subcommand before it reports the stray word
    if (const auto rest = app.remaining(); !rest.empty() && app.get_subcommands().empty())
      err << "usage error: unknown command '" << rest.front() << "'\n";
    else
      err << "usage error: " << e.what() << '\n';
    return 2;
  }

  Session session(g, out);
  try {
    return action(session);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const RadiusError& e) {
    err << "error: " << e.what() << " (increase --radius)\n";
    return 1;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace artin
