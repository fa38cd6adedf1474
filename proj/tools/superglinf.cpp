// Batch front end: parse the JSON formats, run classifications, brackets and
// enumerations, emit JSON, CSV, DOT or ASCII.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "superglinf/json_io.hpp"
#include "superglinf/transport.hpp"
#include "superglinf/weyl.hpp"

using namespace superglinf;
using io::Json;

namespace {

Json load_input(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[' || arg[0] == '"'))
    return Json::parse(arg);
  if (arg == "p_st" || arg == "p_plus" || arg == "identity" || arg == "tau" ||
      arg == "pair_swap" || arg.rfind("shift:", 0) == 0)
    return Json(arg);
  std::ifstream in(arg);
  if (!in) throw std::runtime_error("cannot open input '" + arg + "'");
  Json j;
  in >> j;
  return j;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output '" + path + "'");
  out << text;
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("SUPERGLINF_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 20240817ull;
}

Rational rat_abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

int run(int argc, char** argv) {
  CLI::App app{"exact computations with parity-graded infinite matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "write the report here instead of stdout");

  // parity-classify
  auto* classify_cmd = app.add_subcommand("parity-classify", "half-line count invariants");
  std::string classify_in;
  classify_cmd->add_option("input", classify_in)->required();

  // parity-equiv
  auto* equiv_cmd = app.add_subcommand("parity-equiv", "equivalence decision with witness");
  std::string equiv_p1, equiv_p2, equiv_group = "sg";
  equiv_cmd->add_option("p1", equiv_p1)->required();
  equiv_cmd->add_option("p2", equiv_p2)->required();
  equiv_cmd->add_option("--group", equiv_group, "sc, sg or sn");

  // parity-spectrum
  auto* spectrum_cmd = app.add_subcommand("parity-spectrum", "density spectrum");
  std::string spectrum_in, spectrum_side = "right";
  bool spectrum_csv = false;
  int min_exp = 4, max_exp = 17;
  spectrum_cmd->add_option("input", spectrum_in)->required();
  spectrum_cmd->add_option("--side", spectrum_side, "left or right");
  spectrum_cmd->add_flag("--csv", spectrum_csv, "emit (window, density) rows as CSV");
  spectrum_cmd->add_option("--min-exp", min_exp);
  spectrum_cmd->add_option("--max-exp", max_exp);

  // bracket
  auto* bracket_cmd = app.add_subcommand("bracket", "bracket of two supermatrices");
  std::string bracket_a, bracket_b;
  bool bracket_ext = false;
  bracket_cmd->add_option("a", bracket_a)->required();
  bracket_cmd->add_option("b", bracket_b)->required();
  bracket_cmd->add_flag("--extended", bracket_ext, "work in the central extension");

  // cocycle
  auto* cocycle_cmd = app.add_subcommand("cocycle", "central extension cocycle value");
  std::string cocycle_a, cocycle_b;
  cocycle_cmd->add_option("a", cocycle_a)->required();
  cocycle_cmd->add_option("b", cocycle_b)->required();

  // phi
  auto* phi_cmd = app.add_subcommand("phi", "relabelling isomorphism on an extended element");
  std::string phi_sigma_in, phi_x;
  phi_cmd->add_option("sigma", phi_sigma_in)->required();
  phi_cmd->add_option("x", phi_x)->required();

  // weyl-bases
  auto* bases_cmd = app.add_subcommand("weyl-bases", "odd-reflection closure of the bases");
  Index wm = 1, wn = 1;
  bool bases_dot = false, bases_ascii = false;
  bases_cmd->add_option("--m", wm)->required();
  bases_cmd->add_option("--n", wn)->required();
  bases_cmd->add_flag("--dot", bases_dot, "emit the graph in DOT format");
  bases_cmd->add_flag("--ascii", bases_ascii, "list node diagrams as ASCII");

  // weyl-coxeter
  auto* cox_cmd = app.add_subcommand("weyl-coxeter", "relation report on tensor weight sets");
  Index cm = 2, cn = 1, cd = 4, cfloor = 12;
  cox_cmd->add_option("--m", cm)->required();
  cox_cmd->add_option("--n", cn)->required();
  cox_cmd->add_option("--d-max", cd);
  cox_cmd->add_option("--floor", cfloor);

  // loop-check
  auto* loop_cmd = app.add_subcommand("loop-check", "residue transform versus the bracket");
  std::string loop_x, loop_y;
  bool loop_print = false;
  Index loop_random = 0;
  loop_cmd->add_option("x", loop_x);
  loop_cmd->add_option("y", loop_y);
  loop_cmd->add_flag("--print-loop", loop_print, "include the Laurent grids");
  loop_cmd->add_option("--random", loop_random, "check this many random pairs instead");

  // subalg-check
  auto* sub_cmd = app.add_subcommand("subalg-check", "membership in a classical-type subalgebra");
  std::string sub_a, sub_spec;
  bool sub_project = false;
  sub_cmd->add_option("a", sub_a)->required();
  sub_cmd->add_option("spec", sub_spec)->required();
  sub_cmd->add_flag("--project", sub_project, "emit the symmetrized projection");

  CLI11_PARSE(app, argc, argv);

  std::ostringstream out;
  int exit_code = 0;

  if (*classify_cmd) {
    out << io::emit_classification(classify(io::parse_parity(load_input(classify_in)))).dump(2)
        << "\n";
  } else if (*equiv_cmd) {
    GroupTag g = equiv_group == "sc"   ? GroupTag::Sc
                 : equiv_group == "sn" ? GroupTag::Sn
                 : equiv_group == "sg" ? GroupTag::Sg
                                       : throw std::runtime_error("--group must be sc, sg or sn");
    ParityFunction p1 = io::parse_parity(load_input(equiv_p1));
    ParityFunction p2 = io::parse_parity(load_input(equiv_p2));
    EquivalenceWitness w = equivalent(p1, p2, g);
    Json j = io::emit_witness(w);
    if (w.equivalent) {
      bool ok = witness_replays(w, p1, p2);
      j["replay_verified"] = ok;
      if (!ok) exit_code = 1;
    }
    out << j.dump(2) << "\n";
  } else if (*spectrum_cmd) {
    Side side = spectrum_side == "left" ? Side::left : Side::right;
    WindowSchedule sched{min_exp, max_exp};
    Json in = load_input(spectrum_in);
    SpectrumEstimate e = io::is_block_program(in)
                             ? spectrum(io::parse_block_program(in), side, sched)
                             : spectrum(io::parse_parity(in), side, sched);
    if (spectrum_csv) {
      out << "a,b,density\n";
      for (const auto& s : e.samples)
        out << s.a << "," << s.b << "," << rational_str(s.density) << "\n";
      out << "estimate," << rational_str(e.lower) << "," << rational_str(e.upper) << "\n";
    } else {
      out << io::emit_spectrum(e).dump(2) << "\n";
    }
  } else if (*bracket_cmd) {
    if (bracket_ext) {
      ExtendedElement x = io::parse_extended(load_input(bracket_a));
      ExtendedElement y = io::parse_extended(load_input(bracket_b));
      out << io::emit_extended(extended_bracket(x, y)).dump(2) << "\n";
    } else {
      SuperMatrix a = io::parse_supermatrix(load_input(bracket_a));
      SuperMatrix b = io::parse_supermatrix(load_input(bracket_b));
      out << io::emit_supermatrix(bracket(a, b)).dump(2) << "\n";
    }
  } else if (*cocycle_cmd) {
    SuperMatrix a = io::parse_supermatrix(load_input(cocycle_a));
    SuperMatrix b = io::parse_supermatrix(load_input(cocycle_b));
    Json j;
    j["value"] = rational_str(cocycle(a, b));
    out << j.dump(2) << "\n";
  } else if (*phi_cmd) {
    FinPermutation s = io::parse_permutation(load_input(phi_sigma_in));
    ExtendedElement x = io::parse_extended(load_input(phi_x));
    out << io::emit_extended(phi_sigma(s, x)).dump(2) << "\n";
  } else if (*bases_cmd) {
    weyl::BaseGraph g = weyl::enumerate_bases(wm, wn);
    if (bases_dot) {
      out << g.dot();
    } else if (bases_ascii) {
      for (const auto& w : g.nodes) out << w.letters() << "  " << w.ascii_diagram() << "\n";
    } else {
      Json j;
      j["m"] = wm;
      j["n"] = wn;
      Json nodes = Json::array();
      for (const auto& w : g.nodes) nodes.push_back(w.letters());
      j["nodes"] = nodes;
      Json edges = Json::array();
      for (auto& [a, b] : g.edges) edges.push_back({a, b});
      j["edges"] = edges;
      j["connected"] = g.connected;
      out << j.dump(2) << "\n";
    }
  } else if (*cox_cmd) {
    weyl::CoxeterReport rep = weyl::check_coxeter(cm, cn, cd, cfloor);
    Json j;
    j["m"] = cm;
    j["n"] = cn;
    j["d_max"] = cd;
    j["floor"] = cfloor;
    Json rels = Json::array();
    for (const auto& rc : rep.relations) {
      Json r;
      r["nodes"] = rc.j == 0 ? Json::array({rc.i}) : Json::array({rc.i, rc.j});
      r["kind"] = rc.kind;
      Json orders;
      for (auto& [d, o] : rc.orders) orders[std::to_string(d)] = o;
      r["orders"] = orders;
      r["pass"] = rc.pass;
      r["detail"] = rc.detail;
      rels.push_back(r);
    }
    j["relations"] = rels;
    j["all_pass"] = rep.all_pass();
    out << j.dump(2) << "\n";
    if (!rep.all_pass()) exit_code = 1;
  } else if (*loop_cmd) {
    if (loop_random > 0) {
      std::mt19937_64 rng(seed_from_env());
      auto pick = [&](Index lo, Index hi) {
        return std::uniform_int_distribution<Index>(lo, hi)(rng);
      };
      Index failures = 0;
      for (Index t = 0; t < loop_random; ++t) {
        Index k = pick(1, 4), band = pick(0, 3);
        std::string bits;
        for (Index u = 0; u < k; ++u) bits.push_back(pick(0, 1) ? '1' : '0');
        ParityFunction p = ParityFunction::periodic(bits);
        PeriodicBandMatrix x(k, band, p, PeriodicType::A), y(k, band, p, PeriodicType::A);
        for (Index e = 0; e < 2 * k; ++e) {
          Index r = pick(0, k - 1);
          x.set_cell(r, r + pick(-band, band), make_rational(long(pick(-6, 6)), long(pick(1, 4))));
          r = pick(0, k - 1);
          y.set_cell(r, r + pick(-band, band), make_rational(long(pick(-6, 6)), long(pick(1, 4))));
        }
        if (!(to_loop(periodic_bracket(x, y)) == loop_bracket(to_loop(x), to_loop(y)))) ++failures;
      }
      Json j;
      j["samples"] = loop_random;
      j["failures"] = failures;
      j["homomorphism"] = failures == 0;
      out << j.dump(2) << "\n";
      if (failures != 0) exit_code = 1;
    } else {
      if (loop_x.empty() || loop_y.empty())
        throw std::runtime_error("loop-check needs two matrices or --random N");
      PeriodicBandMatrix x = io::parse_periodic(load_input(loop_x));
      PeriodicBandMatrix y = io::parse_periodic(load_input(loop_y));
      PeriodicBandMatrix c = periodic_bracket(x, y);
      LaurentMatrix lhs = to_loop(c);
      LaurentMatrix rhs = loop_bracket(to_loop(x), to_loop(y));
      bool ok = lhs == rhs;
      Json j;
      j["bracket"] = io::emit_periodic(c);
      j["homomorphism"] = ok;
      if (loop_print) {
        j["loop_of_bracket"] = lhs.str();
        j["bracket_of_loops"] = rhs.str();
      }
      out << j.dump(2) << "\n";
      if (!ok) exit_code = 1;
    }
  } else if (*sub_cmd) {
    bool bare_kind = sub_spec == "B" || sub_spec == "D" || sub_spec == "pe" || sub_spec == "q";
    InvolutionSpec spec = io::parse_involution(bare_kind ? Json(sub_spec) : load_input(sub_spec));
    SuperMatrix a = io::parse_supermatrix(load_input(sub_a));
    bool member = subalgebra_member(a, spec);
    Json j;
    j["kind"] = involution_name(spec.kind);
    j["member"] = member;
    if (sub_project) {
      SuperMatrix proj = subalgebra_project(a, spec);
      j["projection"] = io::emit_supermatrix(proj);
      Rational dist(0);
      SuperMatrix diff = a - proj;
      for (const auto& [pos, v] : diff.entries()) dist += rat_abs(v);
      j["distance"] = rational_str(dist);
    } else if (!member) {
      exit_code = 1;
    }
    out << j.dump(2) << "\n";
  }

  write_output(out_path, out.str());
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
