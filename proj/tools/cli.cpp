#include "cli.hpp"

#include "transdom/colorsearch.hpp"
#include "transdom/core.hpp"
#include "transdom/geometry.hpp"
#include "transdom/io.hpp"
#include "transdom/paley.hpp"
#include "transdom/solvers.hpp"
#include "transdom/vcnets.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <random>
#include <sstream>

namespace transdom::cli {

using nlohmann::json;
using nlohmann::ordered_json;

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InstanceTooLarge: return kExitTooLarge;
    case ErrorCode::BudgetExhausted: return kExitBudget;
    case ErrorCode::InvariantViolation:
    case ErrorCode::NonConvergence: return kExitInvariant;
    default: return kExitInput;
  }
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

namespace {

struct Globals {
  std::optional<std::uint64_t> seed;
  int threads = 0;
  std::string format = "json";
  std::optional<std::uint64_t> budget;
  bool rank_relabel = false;
};

/// Collects what a command read, for the inputs digest.
struct Inputs {
  std::vector<std::string> files;
  std::string bytes;
  ordered_json flags = ordered_json::object();

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    files.push_back(path);
    bytes += s.str();
    bytes.push_back('\0');
    return s.str();
  }
};

struct Outcome {
  ordered_json result;
  bool randomized = false;
  int status = kExitOk;
};

json set_json(const VertexSet& s) { return json(s); }
std::string frac(const Rational& r) { return to_fraction_string(r); }

int header_fields(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream f(line);
    int count = 0;
    for (std::string tok; f >> tok;) ++count;
    if (count) return count;
  }
  return 0;
}

/// Plain or coloured tournament file; plain files become single-coloured.
ColoredTournament parse_any_tournament(const std::string& text) {
  std::istringstream in(text);
  if (header_fields(text) == 2) return read_colored_tournament(in);
  return ColoredTournament::uniform(read_tournament(in));
}

ColoredTournament parse_colored(const std::string& text) {
  std::istringstream in(text);
  return read_colored_tournament(in);
}

PointSet parse_points(const std::string& text, bool rank_relabel) {
  std::istringstream in(text);
  return read_points(in, rank_relabel);
}

ScramblingMask parse_mask(const std::string& text) {
  ScramblingMask mask;
  std::string s = text;
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  for (std::string tok; in >> tok;) {
    int c = 0;
    try {
      std::size_t used = 0;
      c = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "mask entries must be colour numbers, got '" + tok + "'");
    }
    if (c < 1 || c > 32) throw Error(ErrorCode::InvalidArgument, "colour " + tok + " outside 1..32");
    mask.bits |= 1U << (c - 1);
  }
  return mask;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

ordered_json mask_json(ScramblingMask m) { return ordered_json(m.colors()); }

ordered_json class_json(ScramblingMask m) {
  const auto c = classify_scrambling_3d(m);
  ordered_json j;
  j["mask"] = mask_json(m);
  j["bits"] = m.bits;
  std::vector<std::string> signs;
  for (int color : m.colors()) signs.push_back(SignPattern::of_color(color, 3).to_string());
  j["patterns"] = signs;
  j["class"] = c.name();
  j["rule"] = c.describe();
  return j;
}

/// Source of a hypergraph for vc / lp / epsnet: H(T) of a tournament file, or of a
/// scrambled coordinate tournament when --points is given.
struct HyperSource {
  std::string file;
  bool points = false;
  std::string mask;
};

Hypergraph load_hypergraph(const HyperSource& src, const Globals& g, Inputs& inputs) {
  const std::string text = inputs.read(src.file);
  if (src.points) {
    const PointSet s = parse_points(text, g.rank_relabel);
    return domination_hypergraph(scramble(coordinate_tournament(s), parse_mask(src.mask)).base());
  }
  return domination_hypergraph(parse_any_tournament(text).base());
}

ordered_json feasibility_json(const FeasibilityReport& r) {
  ordered_json j;
  j["a"] = r.a;
  j["b"] = r.b;
  j["variant"] = to_string(r.variant);
  j["lhs"] = frac(r.lhs);
  j["rhs"] = frac(r.rhs);
  j["ratio"] = frac(r.ratio);
  j["ratio_approx"] = r.ratio.get_d();
  j["feasible"] = r.feasible;
  j["implied_bound"] = r.implied_bound;
  j["paths_agree"] = r.paths_agree;
  return j;
}

void print_text(std::ostream& out, const std::string& command, const ordered_json& result, double ms) {
  out << command << " (" << std::fixed << std::setprecision(1) << ms << " ms)\n";
  for (const auto& [key, value] : result.items()) {
    std::string v = value.is_string() ? value.get<std::string>() : value.dump();
    if (v.size() > 120) v = v.substr(0, 117) + "...";
    out << "  " << std::left << std::setw(18) << key << ' ' << v << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Domination, enclosure and box-cover tools for transitively coloured tournaments", "transdom"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for randomized commands");
  app.add_option("--threads", g.threads, "cap on worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget", g.budget, "node / subset budget for exhaustive searches");
  app.add_flag("--rank-relabel", g.rank_relabel, "replace point coordinates by ranks instead of rejecting ties");

  Inputs inputs;
  std::function<Outcome()> action;
  std::string command;

  auto sub = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  // dom
  std::string dom_file;
  bool dom_greedy = false, dom_exact = false;
  std::optional<int> dom_limit;
  int dom_ceiling = 100;
  auto* dom = sub("dom", "minimum (or greedy) dominating set of a tournament");
  dom->add_option("file", dom_file, "tournament file (plain or coloured)")->required();
  auto* dom_greedy_flag = dom->add_flag("--greedy", dom_greedy, "greedy upper bound only");
  dom->add_flag("--exact", dom_exact, "exact search (default)")->excludes(dom_greedy_flag);
  dom->add_option("--limit", dom_limit, "give up once dom(T) is proven larger than this");
  dom->add_option("--ceiling", dom_ceiling, "largest n accepted by the exact solver");
  dom->callback([&] {
    command = "dom";
    inputs.flags = {{"greedy", dom_greedy}, {"limit", dom_limit ? json(*dom_limit) : json()}, {"ceiling", dom_ceiling}};
    action = [&] {
      const Tournament t = parse_any_tournament(inputs.read(dom_file)).base();
      Outcome o;
      o.result["n"] = t.size();
      if (dom_greedy) {
        const VertexSet s = greedy_dominating_set(t);
        o.result["size"] = s.size();
        o.result["set"] = set_json(s);
        o.result["optimal"] = false;
        return o;
      }
      DominationOptions opt;
      opt.exact_ceiling = dom_ceiling;
      opt.limit = dom_limit;
      const DominationOutcome r = min_dominating_set(t, opt);
      if (!r.within_limit()) {
        o.result["within_limit"] = false;
        o.result["lower_bound"] = r.lower_bound;
        return o;
      }
      o.result["size"] = r.certificate->size;
      o.result["set"] = set_json(r.certificate->set);
      o.result["optimal"] = r.certificate->optimal;
      o.result["lower_bound_used"] = r.certificate->lower_bound_used;
      return o;
    };
  });

  // encl
  std::string encl_file;
  bool encl_min = false, encl_greedy = false;
  auto* encl = sub("encl", "enclosure set as the union of dominating sets of all scramblings");
  encl->add_option("file", encl_file, "coloured tournament file")->required();
  encl->add_flag("--min", encl_min, "also compute a minimum enclosure set (n <= 25)");
  encl->add_flag("--greedy", encl_greedy, "greedy dominating sets per scrambling");
  encl->callback([&] {
    command = "encl";
    inputs.flags = {{"min", encl_min}, {"greedy", encl_greedy}};
    action = [&] {
      const ColoredTournament ct = parse_any_tournament(inputs.read(encl_file));
      EnclosureOptions opt;
      opt.greedy = encl_greedy;
      const ScramblingEnclosure r = enclosure_via_scramblings(ct, opt);
      Outcome o;
      o.result["n"] = ct.size();
      o.result["k"] = ct.colors();
      o.result["enclosure"] = set_json(r.enclosure);
      o.result["size"] = r.enclosure.size();
      ordered_json per = ordered_json::array();
      for (std::size_t m = 0; m < r.per_mask.size(); ++m)
        per.push_back({{"mask", mask_json({static_cast<std::uint32_t>(m)})}, {"set", set_json(r.per_mask[m])}});
      o.result["per_mask"] = per;
      o.result["size_sum"] = r.size_sum;
      o.result["size_max"] = r.size_max;
      o.result["bound"] = (1 << ct.colors()) * r.size_max;
      o.result["verified"] = is_enclosure(ct, r.enclosure);
      o.result["transitive"] = verify_transitive_coloring(ct);
      if (encl_min) {
        const VertexSet m = min_enclosure_set(ct);
        o.result["min_enclosure"] = set_json(m);
        o.result["min_size"] = m.size();
      }
      return o;
    };
  });

  // scramble
  std::string scr_file, scr_mask, scr_out;
  auto* scr = sub("scramble", "reverse every edge whose colour is in the mask");
  scr->add_option("file", scr_file, "coloured tournament file")->required();
  scr->add_option("--mask", scr_mask, "comma-separated colours, e.g. 1,3")->required();
  scr->add_option("--out", scr_out, "write the scrambled tournament here");
  scr->callback([&] {
    command = "scramble";
    inputs.flags = {{"mask", scr_mask}, {"out", scr_out}};
    action = [&] {
      const ColoredTournament ct = parse_colored(inputs.read(scr_file));
      const ScramblingMask mask = parse_mask(scr_mask);
      if (ct.colors() < 32 && (mask.bits >> ct.colors()) != 0)
        throw Error(ErrorCode::InvalidArgument, "mask names a colour above k=" + std::to_string(ct.colors()));
      const ColoredTournament s = scramble(ct, mask);
      Outcome o;
      o.result["mask"] = mask_json(mask);
      o.result["transitive_before"] = verify_transitive_coloring(ct);
      o.result["transitive_after"] = verify_transitive_coloring(s);
      o.result["acyclic_after"] = s.base().is_acyclic();
      if (scr_out.empty())
        o.result["tournament"] = to_text(s);
      else {
        write_file(scr_out, to_text(s));
        o.result["written"] = scr_out;
      }
      return o;
    };
  });

  // classify
  std::optional<std::string> cls_mask;
  auto* cls = sub("classify", "classify the sixteen 3-coordinate scramblings");
  cls->add_option("--mask", cls_mask, "comma-separated colours 1..4; all sixteen masks when omitted");
  cls->callback([&] {
    command = "classify";
    inputs.flags = {{"mask", cls_mask ? json(*cls_mask) : json()}};
    action = [&] {
      Outcome o;
      if (cls_mask) {
        o.result = class_json(parse_mask(*cls_mask));
        return o;
      }
      ordered_json all = ordered_json::array();
      std::map<std::string, int> counts;
      for (std::uint32_t m = 0; m < 16; ++m) {
        all.push_back(class_json({m}));
        ++counts[classify_scrambling_3d({m}).name()];
      }
      o.result["masks"] = all;
      o.result["counts"] = counts;
      return o;
    };
  });

  // boxcover
  std::string box_file, box_method = "exact";
  int box_ceiling = 256;
  auto* box = sub("boxcover", "select points whose pairwise boxes cover the whole set");
  box->add_option("file", box_file, "point file")->required();
  box->add_option("--method", box_method, "per-scrambling domination")->check(CLI::IsMember({"exact", "greedy"}));
  box->add_option("--ceiling", box_ceiling, "largest n solved exactly per scrambling");
  box->callback([&] {
    command = "boxcover";
    inputs.flags = {{"method", box_method}, {"ceiling", box_ceiling}, {"rank_relabel", g.rank_relabel}};
    action = [&] {
      const PointSet s = parse_points(inputs.read(box_file), g.rank_relabel);
      BoxCoverOptions opt;
      opt.greedy = box_method == "greedy";
      opt.exact_ceiling = box_ceiling;
      const BoxCoverCertificate cert = box_cover(s, opt);
      Outcome o;
      o.randomized = true;
      o.result["n"] = s.size();
      o.result["d"] = s.dimension();
      o.result["cover"] = set_json(cert.cover);
      o.result["size"] = cert.cover.size();
      ordered_json wit = ordered_json::object();
      for (const auto& w : cert.witnesses) wit[std::to_string(w.point)] = {w.p, w.q};
      o.result["witnesses"] = wit;
      ordered_json per = ordered_json::array();
      std::map<std::string, std::vector<int>> per_class;
      for (const auto& md : cert.per_mask) {
        per.push_back({{"mask", mask_json(md.mask)},
                       {"class", md.class_name},
                       {"size", md.dominating_set.size()},
                       {"exact", md.exact},
                       {"set", set_json(md.dominating_set)}});
        per_class[md.class_name].push_back(static_cast<int>(md.dominating_set.size()));
      }
      o.result["per_mask"] = per;
      o.result["per_class_sizes"] = per_class;
      o.result["verified"] = verify_box_cover(s, cert.cover);
      return o;
    };
  });

  // appendix
  unsigned app_a = 17, app_b = 14, app_max_a = 40, app_max_b = 40;
  std::string app_variant = "refined";
  bool app_scan = false;
  auto* apx = sub("appendix", "exact feasibility arithmetic for the net-size bound");
  apx->add_option("--a", app_a, "net size")->check(CLI::PositiveNumber);
  apx->add_option("--b", app_b, "complement size")->check(CLI::PositiveNumber);
  apx->add_option("--variant", app_variant)->check(CLI::IsMember({"cube", "halved", "refined"}));
  apx->add_flag("--scan", app_scan, "tabulate all 1 <= a <= max-a, 1 <= b <= max-b");
  apx->add_option("--max-a", app_max_a)->check(CLI::PositiveNumber);
  apx->add_option("--max-b", app_max_b)->check(CLI::PositiveNumber);
  apx->callback([&] {
    command = "appendix";
    inputs.flags = {{"a", app_a}, {"b", app_b}, {"variant", app_variant}, {"scan", app_scan},
                    {"max_a", app_max_a}, {"max_b", app_max_b}};
    action = [&] {
      const FeasibilityVariant v = parse_variant(app_variant);
      Outcome o;
      if (!app_scan) {
        o.result = feasibility_json(appendix_feasibility(app_a, app_b, v));
        return o;
      }
      ordered_json rows = ordered_json::array();
      std::optional<FeasibilityReport> best;
      for (const auto& r : appendix_scan(app_max_a, app_max_b, v)) {
        rows.push_back({{"a", r.a}, {"b", r.b}, {"ratio", r.ratio.get_d()}, {"feasible", r.feasible}});
        if (r.feasible && (!best || r.a < best->a)) best = r;
      }
      o.result["variant"] = to_string(v);
      o.result["max_a"] = app_max_a;
      o.result["max_b"] = app_max_b;
      o.result["min_feasible"] = best ? feasibility_json(*best) : ordered_json();
      o.result["table"] = rows;
      return o;
    };
  });

  // paley
  std::optional<int> pal_q;
  std::string pal_out, pal_refute, pal_threshold, pal_nu;
  std::optional<int> pal_paradox;
  bool pal_dom = false;
  auto* pal = sub("paley", "Paley tournaments, paradoxicality and the refutation pipeline");
  pal->add_option("--q", pal_q, "prime q = 3 mod 4");
  pal->add_option("--out", pal_out, "write PT_q in tournament format");
  pal->add_option("--paradoxical", pal_paradox, "check that no k vertices dominate PT_q");
  pal->add_flag("--dom", pal_dom, "exact domination number of PT_q");
  pal->add_option("--refute", pal_refute, "coloured tournament on a Paley base to run the pipeline on");
  pal->add_option("--threshold", pal_threshold, "override the order threshold (integer)");
  pal->add_option("--nu", pal_nu, "also report vertex types at this threshold, e.g. 1/256");
  pal->callback([&] {
    command = "paley";
    inputs.flags = {{"q", pal_q ? json(*pal_q) : json()}, {"out", pal_out},
                    {"paradoxical", pal_paradox ? json(*pal_paradox) : json()}, {"dom", pal_dom},
                    {"refute", pal_refute}, {"threshold", pal_threshold}, {"nu", pal_nu}};
    action = [&] {
      Outcome o;
      if (!pal_refute.empty()) {
        const ColoredTournament ct = parse_colored(inputs.read(pal_refute));
        std::optional<BigInt> threshold;
        if (!pal_threshold.empty()) {
          try {
            threshold = BigInt(pal_threshold);
          } catch (const std::invalid_argument&) {
            throw Error(ErrorCode::InvalidArgument, "threshold must be an integer");
          }
        }
        const RefutationReport r = refute_transitive_coloring(ct, threshold);
        o.result["q"] = r.q;
        o.result["k"] = r.k;
        o.result["step"] = r.step;
        o.result["contradiction"] = r.contradiction;
        o.result["reason"] = r.reason;
        o.result["nu"] = frac(r.nu);
        o.result["threshold"] = r.threshold.get_str();
        o.result["above_threshold"] = r.above_threshold;
        o.result["vertex"] = r.vertex ? json(*r.vertex) : json();
        o.result["color"] = r.color ? json(*r.color) : json();
        o.result["in_neighbors"] = set_json(r.in_neighbors);
        o.result["out_neighbors"] = set_json(r.out_neighbors);
        o.result["discrepancy"] = r.discrepancy;
        o.result["all_edges_forward"] = r.all_edges_forward;
        o.result["product_within_q"] = r.product_within_q;
        if (!pal_nu.empty()) {
          const TypeReport t = vertex_types(ct, parse_fraction(pal_nu));
          ordered_json types = ordered_json::array();
          for (const auto& vt : t.types) types.push_back({{"in", vt.in_colors}, {"out", vt.out_colors}});
          o.result["types"] = types;
          o.result["largest_type_class"] = set_json(t.largest_class);
          o.result["large_class_bound"] = t.large_class_bound;
        }
        return o;
      }
      if (!pal_q) throw Error(ErrorCode::InvalidArgument, "paley needs --q or --refute");
      const PaleyParams params = PaleyParams::make(*pal_q);
      const Tournament t = paley_tournament(*pal_q);
      o.result["q"] = *pal_q;
      o.result["residues"] = params.residues;
      o.result["out_degree"] = (*pal_q - 1) / 2;
      if (pal_dom) {
        const auto c = exact_dominating_set(t);
        o.result["dom"] = c.size;
        o.result["dominating_set"] = set_json(c.set);
      }
      if (pal_paradox) {
        const std::uint64_t budget = g.budget.value_or(200'000'000);
        o.result["k"] = *pal_paradox;
        o.result["paradoxical"] = is_k_paradoxical(t, *pal_paradox, budget);
      }
      if (!pal_out.empty()) {
        write_file(pal_out, to_text(t));
        o.result["written"] = pal_out;
      }
      return o;
    };
  });

  // colorsearch
  std::string cs_file, cs_out;
  int cs_k = 2;
  bool cs_recover = false;
  auto* cs = sub("colorsearch", "search for a transitive k-colouring, or recover a permutation");
  cs->add_option("file", cs_file, "tournament file (coloured with --recover)")->required();
  cs->add_option("--k", cs_k, "number of colours")->check(CLI::Range(1, 16));
  cs->add_option("--out", cs_out, "write the colouring found");
  cs->add_flag("--recover", cs_recover, "recover the permutation behind a transitive 2-colouring");
  cs->callback([&] {
    command = "colorsearch";
    inputs.flags = {{"k", cs_k}, {"out", cs_out}, {"recover", cs_recover}};
    action = [&] {
      Outcome o;
      const std::string text = inputs.read(cs_file);
      if (cs_recover) {
        const auto r = recover_permutation(parse_colored(text));
        if (!r) {
          o.result["recovered"] = false;
          o.result["reason"] = "cyclic value relation on a transitive 2-colouring";
          o.status = kExitInvariant;
          return o;
        }
        o.result["recovered"] = true;
        o.result["permutation"] = r->permutation.values;
        o.result["position_vertex"] = r->position_vertex;
        return o;
      }
      const Tournament t = parse_any_tournament(text).base();
      ColorSearchOptions opt;
      if (g.budget) opt.node_budget = *g.budget;
      const auto found = find_transitive_coloring(t, cs_k, opt);
      o.result["n"] = t.size();
      o.result["k"] = cs_k;
      o.result["found"] = found.has_value();
      if (found) {
        if (cs_out.empty())
          o.result["coloring"] = to_text(*found);
        else {
          write_file(cs_out, to_text(*found));
          o.result["written"] = cs_out;
        }
      }
      return o;
    };
  });

  // vc
  HyperSource vc_src;
  std::optional<int> vc_shatter, vc_trace;
  std::optional<std::uint64_t> vc_sampled;
  auto* vc = sub("vc", "VC dimension and shatter function of H(T)");
  vc->add_option("file", vc_src.file, "tournament or point file")->required();
  vc->add_flag("--points", vc_src.points, "input is a point file");
  vc->add_option("--mask", vc_src.mask, "scrambling of the coordinate tournament (with --points)");
  vc->add_option("--shatter", vc_shatter, "shatter function at this subset size instead of the VC dimension");
  vc->add_option("--trace-size", vc_trace, "count only traces of this size");
  vc->add_option("--sampled", vc_sampled, "sample this many subsets (lower bound)");
  vc->callback([&] {
    command = "vc";
    inputs.flags = {{"points", vc_src.points}, {"mask", vc_src.mask},
                    {"shatter", vc_shatter ? json(*vc_shatter) : json()},
                    {"trace_size", vc_trace ? json(*vc_trace) : json()},
                    {"sampled", vc_sampled ? json(*vc_sampled) : json()}};
    action = [&] {
      const Hypergraph h = load_hypergraph(vc_src, g, inputs);
      Outcome o;
      o.result["vertices"] = h.vertices;
      if (!vc_shatter) {
        const ShatterReport r = vc_dimension(h);
        o.result["vc"] = r.vc;
        o.result["witness"] = set_json(r.witness);
        o.result["shattered_sets"] = r.shattered_sets;
        o.result["exact"] = r.exact;
        return o;
      }
      std::optional<ShatterSampling> sampling;
      if (vc_sampled) {
        sampling = ShatterSampling{g.seed.value_or(0), *vc_sampled};
        o.randomized = true;
      }
      const std::uint64_t budget = g.budget.value_or(20'000'000);
      o.result["n"] = *vc_shatter;
      if (vc_trace) o.result["trace_size"] = *vc_trace;
      o.result["value"] = vc_trace ? shatter_function_k(h, *vc_shatter, *vc_trace, sampling, budget)
                                   : shatter_function(h, *vc_shatter, sampling, budget);
      o.result["exact"] = !sampling;
      return o;
    };
  });

  // lp
  HyperSource lp_src;
  bool lp_approx = false;
  auto* lpc = sub("lp", "fractional transversal and matching numbers of H(T)");
  lpc->add_option("file", lp_src.file, "tournament or point file")->required();
  lpc->add_flag("--points", lp_src.points, "input is a point file");
  lpc->add_option("--mask", lp_src.mask, "scrambling of the coordinate tournament (with --points)");
  lpc->add_flag("--approximate", lp_approx, "floating-point simplex with a certified gap");
  lpc->callback([&] {
    command = "lp";
    inputs.flags = {{"points", lp_src.points}, {"mask", lp_src.mask}, {"approximate", lp_approx}};
    action = [&] {
      const Hypergraph h = load_hypergraph(lp_src, g, inputs);
      const FractionalSolution f = fractional_transversal(h, lp_approx ? LpMode::Approximate : LpMode::Exact);
      Outcome o;
      o.result["mode"] = lp_approx ? "approximate" : "exact";
      o.result["vertices"] = h.vertices;
      if (!lp_approx) {
        o.result["tau_star"] = frac(f.exact_value);
        std::vector<std::string> w, y;
        for (const auto& x : f.exact_weights) w.push_back(frac(x));
        for (const auto& x : f.exact_matching) y.push_back(frac(x));
        o.result["weights"] = w;
        o.result["matching"] = y;
      } else {
        o.result["weights"] = f.weights;
        o.result["gap"] = f.gap;
      }
      o.result["value"] = f.value;
      o.result["below_two"] = f.value < 2.0;
      return o;
    };
  });

  // epsnet
  HyperSource eps_src;
  int eps_a = 17, eps_b = 14;
  std::uint64_t eps_trials = 1000;
  auto* eps = sub("epsnet", "sample 1/2-nets from the optimal fractional transversal");
  eps->add_option("file", eps_src.file, "tournament or point file")->required();
  eps->add_flag("--points", eps_src.points, "input is a point file");
  eps->add_option("--mask", eps_src.mask, "scrambling of the coordinate tournament (with --points)");
  eps->add_option("--a", eps_a, "net size")->check(CLI::PositiveNumber);
  eps->add_option("--b", eps_b, "tail size")->check(CLI::NonNegativeNumber);
  eps->add_option("--trials", eps_trials)->check(CLI::PositiveNumber);
  eps->callback([&] {
    command = "epsnet";
    inputs.flags = {{"points", eps_src.points}, {"mask", eps_src.mask}, {"a", eps_a}, {"b", eps_b},
                    {"trials", eps_trials}};
    action = [&] {
      const Hypergraph h = load_hypergraph(eps_src, g, inputs);
      const FractionalSolution f =
          fractional_transversal(h, h.vertices <= kExactLpCeiling ? LpMode::Exact : LpMode::Approximate);
      const EpsNetReport r = epsnet_sample(h, f, eps_a, eps_b, eps_trials, g.seed.value_or(0));
      Outcome o;
      o.randomized = true;
      o.result["tau_star"] = f.value;
      o.result["trials"] = r.trials;
      o.result["successes"] = r.successes;
      o.result["rate"] = r.rate;
      o.result["net_size"] = r.net_size;
      o.result["tail_size"] = r.tail_size;
      return o;
    };
  });

  // gen
  std::string gen_kind, gen_out, gen_values;
  int gen_q = 7, gen_n = 10, gen_d = 2, gen_a = 3, gen_b = 3;
  auto* gen = sub("gen", "write example instances");
  gen->add_option("kind", gen_kind, "instance family")
      ->required()
      ->check(CLI::IsMember({"paley", "pt7", "triangle", "blowup", "extremal", "permutation", "bipartite",
                             "random-tournament", "random-points"}));
  gen->add_option("--out", gen_out, "output file")->required();
  gen->add_option("--q", gen_q, "Paley order");
  gen->add_option("--n", gen_n, "size of random instances")->check(CLI::PositiveNumber);
  gen->add_option("--d", gen_d, "dimension")->check(CLI::PositiveNumber);
  gen->add_option("--a", gen_a, "bipartite part A")->check(CLI::PositiveNumber);
  gen->add_option("--b", gen_b, "bipartite part B")->check(CLI::PositiveNumber);
  gen->add_option("--values", gen_values, "permutation values, e.g. \"2 1 4 3\"");
  gen->callback([&] {
    command = "gen";
    inputs.flags = {{"kind", gen_kind}, {"out", gen_out}, {"q", gen_q}, {"n", gen_n}, {"d", gen_d},
                    {"a", gen_a}, {"b", gen_b}, {"values", gen_values}};
    action = [&] {
      Outcome o;
      std::mt19937_64 rng(g.seed.value_or(0));
      std::string text;
      std::string format = "colored";
      if (gen_kind == "paley") {
        text = to_text(paley_tournament(gen_q));
        format = "tournament";
      } else if (gen_kind == "pt7") {
        text = to_text(pt7_example_coloring());
      } else if (gen_kind == "triangle") {
        text = to_text(three_colored_triangle());
      } else if (gen_kind == "blowup") {
        text = to_text(blowup_c3());
      } else if (gen_kind == "extremal") {
        text = to_text(extremal_pointset(gen_d));
        format = "points";
      } else if (gen_kind == "permutation") {
        std::istringstream in(gen_values);
        text = to_text(permutation_tournament(read_permutation(in)));
      } else if (gen_kind == "bipartite") {
        o.randomized = true;
        std::vector<std::pair<int, int>> cross;
        for (int i = 0; i < gen_a; ++i)
          for (int j = 0; j < gen_b; ++j)
            if (rng() & 1U) cross.emplace_back(i, j);
        text = to_text(bipartite_example(gen_a, gen_b, cross));
      } else if (gen_kind == "random-tournament") {
        o.randomized = true;
        text = to_text(Tournament::from_rule(gen_n, [&](int, int) { return (rng() & 1U) != 0; }));
        format = "tournament";
      } else {
        o.randomized = true;
        std::vector<std::vector<long>> pts(gen_n, std::vector<long>(gen_d));
        for (int axis = 0; axis < gen_d; ++axis) {
          std::vector<long> order(gen_n);
          for (int i = 0; i < gen_n; ++i) order[i] = i + 1;
          std::shuffle(order.begin(), order.end(), rng);
          for (int i = 0; i < gen_n; ++i) pts[i][axis] = order[i];
        }
        text = to_text(PointSet::from_integers(pts));
        format = "points";
      }
      write_file(gen_out, text);
      o.result["kind"] = gen_kind;
      o.result["format"] = format;
      o.result["written"] = gen_out;
      o.result["digest"] = fnv1a_hex(text);
      return o;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "transdom: " << e.what() << '\n';
    return kExitInput;
  }

  if (g.threads > 0) omp_set_num_threads(g.threads);

  ordered_json report;
  report["command"] = command;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  auto finish_inputs = [&] {
    ordered_json in;
    in["files"] = inputs.files;
    in["flags"] = inputs.flags;
    in["digest"] = "fnv1a64:" + fnv1a_hex(command + '\0' + inputs.flags.dump() + '\0' + inputs.bytes);
    return in;
  };

  int status = kExitOk;
  try {
    Outcome o = action();
    const double ms = elapsed();
    report["inputs"] = finish_inputs();
    report["result"] = o.result;
    report["elapsed_ms"] = ms;
    report["seed"] = o.randomized ? ordered_json(g.seed.value_or(0)) : ordered_json();
    status = o.status;
    if (g.format == "text")
      print_text(out, command, o.result, ms);
    else
      out << report.dump(2) << '\n';
  } catch (const Error& e) {
    status = exit_code_for(e.code());
    report["inputs"] = finish_inputs();
    report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    report["elapsed_ms"] = elapsed();
    report["seed"] = g.seed ? ordered_json(*g.seed) : ordered_json();
    err << "transdom " << command << ": " << e.what() << '\n';
    if (g.format == "json") out << report.dump(2) << '\n';
  } catch (const std::exception& e) {
    status = kExitUnexpected;
    err << "transdom " << command << ": unexpected failure: " << e.what() << '\n';
  }
  return status;
}

}  // namespace transdom::cli
