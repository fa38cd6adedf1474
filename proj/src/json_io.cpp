#include "superglinf/json_io.hpp"

#include <stdexcept>

namespace superglinf::io {

namespace {

std::vector<Parity> parse_bits(const std::string& s) {
  std::vector<Parity> out;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("parity word: expected 0s and 1s");
    out.push_back(c == '1' ? Parity::odd : Parity::even);
  }
  return out;
}

TailRule parse_tail(const Json& j) {
  if (j.contains("const")) {
    std::string s = j.at("const").get<std::string>();
    if (s != "0" && s != "1") throw std::invalid_argument("tail: const must be \"0\" or \"1\"");
    return TailRule::constant(s == "1" ? Parity::odd : Parity::even);
  }
  if (j.contains("periodic")) return TailRule::periodic(j.at("periodic").get<std::string>());
  throw std::invalid_argument("tail: expected {\"const\": ...} or {\"periodic\": ...}");
}

Json emit_tail(const TailRule& t) {
  Json j;
  if (t.constant_rule())
    j["const"] = t.bits();
  else
    j["periodic"] = t.bits();
  return j;
}

Rational parse_scalar(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("scalar: expected \"num/den\" string or integer");
}

TailMap parse_tail_map(const Json& j) {
  TailMap t;
  t.period = j.at("period").get<Index>();
  if (t.period < 1) throw std::invalid_argument("permutation tail: period must be positive");
  t.offset.clear();
  t.step.clear();
  for (const auto& cls : j.at("classes")) {
    t.offset.push_back(cls.at(0).get<Index>());
    t.step.push_back(cls.at(1).get<Index>());
  }
  if (Index(t.offset.size()) != t.period)
    throw std::invalid_argument("permutation tail: one [offset, step] pair per residue class");
  return t;
}

Json emit_tail_map(const TailMap& t) {
  Json j;
  j["period"] = t.period;
  Json classes = Json::array();
  for (Index r = 0; r < t.period; ++r) classes.push_back({t.offset[r], t.step[r]});
  j["classes"] = classes;
  return j;
}

}  // namespace

ParityFunction parse_parity(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "p_st") return ParityFunction::p_st();
    if (s == "p_plus") return ParityFunction::p_plus();
    throw std::invalid_argument("parity function: unknown builtin '" + s + "'");
  }
  Index lo = j.value("window_lo", Index(0));
  std::vector<Parity> window = parse_bits(j.value("window", std::string()));
  return ParityFunction(lo, std::move(window), parse_tail(j.at("left_tail")),
                        parse_tail(j.at("right_tail")));
}

Json emit_parity(const ParityFunction& p) {
  Json j;
  j["window_lo"] = p.window_lo();
  std::string bits;
  for (Parity v : p.window()) bits.push_back(parity_char(v));
  j["window"] = bits;
  j["left_tail"] = emit_tail(p.left_tail());
  j["right_tail"] = emit_tail(p.right_tail());
  return j;
}

SuperMatrix parse_supermatrix(const Json& j) {
  SuperMatrix m(parse_parity(j.at("parity")));
  for (const auto& e : j.at("entries"))
    m.add(e.at(0).get<Index>(), e.at(1).get<Index>(), parse_scalar(e.at(2)));
  return m;
}

Json emit_supermatrix(const SuperMatrix& m) {
  Json j;
  j["parity"] = emit_parity(m.parity());
  Json entries = Json::array();
  for (const auto& [pos, v] : m.entries())
    entries.push_back({pos.first, pos.second, rational_str(v)});
  j["entries"] = entries;
  return j;
}

ExtendedElement parse_extended(const Json& j) {
  ExtendedElement x(parse_supermatrix(j));
  if (j.contains("z")) x.z = parse_scalar(j.at("z"));
  return x;
}

Json emit_extended(const ExtendedElement& x) {
  Json j = emit_supermatrix(x.mat);
  j["z"] = rational_str(x.z);
  return j;
}

FinPermutation parse_permutation(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "identity") return FinPermutation::identity();
    if (s == "tau") return FinPermutation::tau();
    if (s == "pair_swap") return FinPermutation::pair_swap();
    if (s.rfind("shift:", 0) == 0) return FinPermutation::shift(std::stoll(s.substr(6)));
    throw std::invalid_argument("permutation: unknown builtin '" + s + "'");
  }
  TailMap left = j.contains("left_tail") ? parse_tail_map(j.at("left_tail")) : TailMap{};
  TailMap right = j.contains("right_tail") ? parse_tail_map(j.at("right_tail")) : TailMap{};
  std::map<Index, Index> exc;
  if (j.contains("exceptions"))
    for (const auto& e : j.at("exceptions")) exc[e.at(0).get<Index>()] = e.at(1).get<Index>();
  if (exc.empty()) return FinPermutation(0, {}, left, right);
  Index lo = exc.begin()->first, hi = exc.rbegin()->first;
  std::vector<Index> window;
  for (Index i = lo; i <= hi; ++i) {
    auto it = exc.find(i);
    window.push_back(it == exc.end() ? i : it->second);
  }
  return FinPermutation(lo, std::move(window), left, right);
}

Json emit_permutation(const FinPermutation& s) {
  Json j;
  Json exc = Json::array();
  for (Index i = s.window_lo(); i <= s.window_hi(); ++i) exc.push_back({i, s.at(i)});
  j["exceptions"] = exc;
  j["left_tail"] = emit_tail_map(s.left_tail());
  j["right_tail"] = emit_tail_map(s.right_tail());
  return j;
}

PeriodicBandMatrix parse_periodic(const Json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type != "A" && type != "B")
    throw std::invalid_argument("periodic matrix: type must be \"A\" or \"B\"");
  PeriodicBandMatrix m(j.at("k").get<Index>(), j.at("band").get<Index>(),
                       parse_parity(j.at("parity")),
                       type == "A" ? PeriodicType::A : PeriodicType::B);
  for (const auto& c : j.at("cells"))
    m.set_cell(c.at(0).get<Index>(), c.at(1).get<Index>(), parse_scalar(c.at(2)));
  return m;
}

Json emit_periodic(const PeriodicBandMatrix& m) {
  Json j;
  j["k"] = m.period();
  j["band"] = m.band();
  j["parity"] = emit_parity(m.parity());
  j["type"] = m.type() == PeriodicType::A ? "A" : "B";
  Json cells = Json::array();
  for (const auto& [cell, v] : m.cells()) cells.push_back({cell.first, cell.second, rational_str(v)});
  j["cells"] = cells;
  return j;
}

bool is_block_program(const Json& j) { return j.is_object() && j.contains("blocks"); }

BlockProgram parse_block_program(const Json& j) {
  const Json& b = j.at("blocks");
  std::string sp = b.at("start_parity").get<std::string>();
  if (sp != "0" && sp != "1")
    throw std::invalid_argument("block program: start_parity must be \"0\" or \"1\"");
  const Json& rule = b.at("rule");
  if (rule.contains("geometric"))
    return BlockProgram(sp == "1" ? Parity::odd : Parity::even, BlockProgram::Rule::geometric,
                        rule.at("geometric").get<Index>());
  if (rule.contains("polynomial"))
    return BlockProgram(sp == "1" ? Parity::odd : Parity::even, BlockProgram::Rule::polynomial,
                        rule.at("polynomial").get<Index>());
  throw std::invalid_argument("block program: rule must be geometric or polynomial");
}

Json emit_block_program(const BlockProgram& p) {
  Json rule;
  if (p.rule() == BlockProgram::Rule::geometric)
    rule["geometric"] = p.param();
  else
    rule["polynomial"] = p.param();
  Json b;
  b["start_parity"] = std::string(1, parity_char(p.start()));
  b["rule"] = rule;
  Json j;
  j["blocks"] = b;
  return j;
}

InvolutionSpec parse_involution(const Json& j) {
  std::string kind = j.is_string() ? j.get<std::string>() : j.at("kind").get<std::string>();
  if (kind == "B") return InvolutionSpec::type_B();
  if (kind == "D") return InvolutionSpec::type_D();
  if (kind == "pe") return InvolutionSpec::type_pe();
  if (kind == "q") {
    FinPermutation pairing = FinPermutation::pair_swap();
    if (j.is_object() && j.contains("pairing")) pairing = parse_permutation(j.at("pairing"));
    return InvolutionSpec::type_q(std::move(pairing));
  }
  throw std::invalid_argument("involution: kind must be B, D, pe or q");
}

namespace {

Json emit_extnat(const ExtNat& n) {
  if (n.infinite) return Json("inf");
  return Json(n.value);
}

}  // namespace

Json emit_classification(const Classification& c) {
  Json j;
  j["class"] = c.label;
  Json counts;
  counts["odd_neg"] = emit_extnat(c.counts.odd_neg);
  counts["even_neg"] = emit_extnat(c.counts.even_neg);
  counts["odd_pos"] = emit_extnat(c.counts.odd_pos);
  counts["even_pos"] = emit_extnat(c.counts.even_pos);
  j["counts"] = counts;
  j["finite"] = c.finite;
  j["odd_total"] = emit_extnat(c.odd_total);
  j["even_total"] = emit_extnat(c.even_total);
  return j;
}

Json emit_spectrum(const SpectrumEstimate& e) {
  Json j;
  j["side"] = e.side == Side::right ? "right" : "left";
  j["lower"] = rational_str(e.lower);
  j["upper"] = rational_str(e.upper);
  j["lower_approx"] = e.lower.get_d();
  j["upper_approx"] = e.upper.get_d();
  j["exact"] = e.exact;
  j["drift"] = rational_str(e.drift);
  Json samples = Json::array();
  for (const auto& s : e.samples)
    samples.push_back({{"a", s.a}, {"b", s.b}, {"density", rational_str(s.density)}});
  j["samples"] = samples;
  return j;
}

Json emit_witness(const EquivalenceWitness& w) {
  Json j;
  j["equivalent"] = w.equivalent;
  j["group"] = group_name(w.group);
  j["via_tau"] = w.via_tau;
  j["sigma"] = w.sigma ? emit_permutation(*w.sigma) : Json(nullptr);
  return j;
}

Json emit_certificate(const MembershipCertificate& c) {
  Json j;
  j["group"] = group_name(c.group);
  j["member"] = c.member;
  j["witness"] = c.witness ? Json(rational_str(*c.witness)) : Json(nullptr);
  j["note"] = c.note;
  return j;
}

}  // namespace superglinf::io
