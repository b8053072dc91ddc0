// hx: construct, verify, and size-bound (k,l)-edge-maximal r-uniform
// hypergraphs from the command line.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hx/connectivity.hpp"
#include "hx/constructions.hpp"
#include "hx/io.hpp"
#include "hx/maximality.hpp"
#include "hx/normalize.hpp"
#include "hx/params.hpp"

using nlohmann::json;

namespace {

long long oracle_engage_cap() {
  if (const char* env = std::getenv("HX_ORACLE_CAP")) {
    try {
      return std::stoll(env);
    } catch (...) {
      throw std::invalid_argument("HX_ORACLE_CAP must be an integer");
    }
  }
  return hx::kDefaultOracleEngageCap;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    out << j.dump(2) << '\n';
  }
}

json witness_json(const hx::CutWitness& w) {
  return json{{"side", w.side}, {"value", w.value}, {"crossing_edges", w.crossing.size()}};
}

json report_json(const hx::MaximalityReport& r) {
  json j{{"admissible", r.admissible}, {"maximal", r.maximal}};
  j["violating_subset"] = r.violating_subset ? json(*r.violating_subset) : json(nullptr);
  j["addable_edge"] = r.addable_edge ? json(*r.addable_edge) : json(nullptr);
  return j;
}

json spectrum_json(const hx::SatelliteSpectrum& sp) {
  json counts = json::array();
  for (size_t i = 0; i < sp.count.size(); ++i)
    if (sp.count[i] > 0) counts.push_back({static_cast<long long>(i), sp.count[i]});
  return json{{"counts", counts}, {"n", sp.vertex_total()}, {"edges", sp.edge_count()}};
}

hx::SatelliteSpectrum parse_spectrum(long long k, long long r, long long l,
                                     const std::string& text) {
  std::vector<std::pair<long long, long long>> counts;
  std::string item;
  std::istringstream iss(text);
  while (std::getline(iss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("spectrum entries must look like size:count");
    counts.emplace_back(std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
  }
  return hx::make_spectrum(k, r, l, counts);
}

enum class OracleChoice { automatic, on, off };

OracleChoice parse_oracle(const std::string& s) {
  if (s == "auto") return OracleChoice::automatic;
  if (s == "on") return OracleChoice::on;
  if (s == "off") return OracleChoice::off;
  throw std::invalid_argument("--oracle must be one of auto|on|off");
}

int run(int argc, char** argv) {
  CLI::App app{"(k,l)-edge-maximal r-uniform hypergraphs: constructions, bounds, verification"};
  app.require_subcommand(1);

  long long n = 0, k = 0, l = 0, r = 0, t = 0, p = 0, a = 0;
  long long max_n = 12;
  std::uint64_t seed = 0;
  std::string in_path, out_path, family, variant = "i", oracle = "auto", spectrum_text;

  auto* cmd_params = app.add_subcommand("params", "print the derived thresholds t and s");
  cmd_params->add_option("--k", k)->required();
  cmd_params->add_option("--r", r)->required();

  auto* cmd_bounds = app.add_subcommand("bounds", "lower/upper size bounds with branch ids");
  cmd_bounds->add_option("--n", n)->required();
  cmd_bounds->add_option("--k", k)->required();
  cmd_bounds->add_option("--l", l)->required();
  cmd_bounds->add_option("--r", r)->required();

  auto* cmd_construct =
      app.add_subcommand("construct", "build a hypergraph family member and write its file");
  cmd_construct->add_option("family", family, "complete | msh | dumbbell | packedstar")
      ->required();
  cmd_construct->add_option("--n", n);
  cmd_construct->add_option("--k", k);
  cmd_construct->add_option("--l", l);
  cmd_construct->add_option("--r", r);
  cmd_construct->add_option("--t", t);
  cmd_construct->add_option("--p", p);
  cmd_construct->add_option("--a", a);
  cmd_construct->add_option("--variant", variant, "packedstar variant: i | ii");
  cmd_construct->add_option("-o,--output", out_path, "output file (stdout when omitted)");

  auto* cmd_kappa = app.add_subcommand("kappa", "edge-connectivity with a min-cut witness");
  cmd_kappa->add_option("file", in_path)->required();
  cmd_kappa->add_option("--oracle", oracle, "auto | on | off");

  auto* cmd_verify = app.add_subcommand("verify", "check (k,l)-edge-maximality");
  cmd_verify->add_option("file", in_path)->required();
  cmd_verify->add_option("--k", k)->required();
  cmd_verify->add_option("--l", l)->required();
  cmd_verify->add_option("--oracle", oracle, "auto | on | off");

  auto* cmd_maximalize =
      app.add_subcommand("maximalize", "greedy seeded saturation to a maximal hypergraph");
  cmd_maximalize->add_option("file", in_path, "start hypergraph (edgeless when omitted)");
  cmd_maximalize->add_option("--n", n, "vertex count for the edgeless start");
  cmd_maximalize->add_option("--r", r, "uniformity for the edgeless start");
  cmd_maximalize->add_option("--k", k)->required();
  cmd_maximalize->add_option("--l", l)->required();
  cmd_maximalize->add_option("--seed", seed)->required();
  cmd_maximalize->add_option("-o,--output", out_path)->required();

  auto* cmd_normalize =
      app.add_subcommand("normalize", "rewrite a satellite spectrum to the MSH fixpoint");
  cmd_normalize->add_option("--k", k)->required();
  cmd_normalize->add_option("--l", l)->required();
  cmd_normalize->add_option("--r", r)->required();
  cmd_normalize->add_option("--spectrum", spectrum_text, "explicit counts, e.g. 1:4,3:2");
  cmd_normalize->add_option("--n", n, "vertex total for a seeded random spectrum");
  cmd_normalize->add_option("--seed", seed, "seed for the random spectrum");

  auto* cmd_sweep = app.add_subcommand("sweep", "bound/construction/verification table (CSV)");
  cmd_sweep->add_option("--max-n", max_n, "largest vertex count per row (default 12)");
  cmd_sweep->add_option("-o,--output", out_path, "output file (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  if (cmd_params->parsed()) {
    const hx::ParamPair pp = hx::params(k, r);
    std::cout << "t=" << pp.t << " s=" << pp.s << '\n';
    return 0;
  }

  if (cmd_bounds->parsed()) {
    const hx::BoundsReport rep = hx::bounds(hx::make_bound_query(n, k, l, r));
    emit(json{{"n", rep.query.n},
              {"k", rep.query.k},
              {"l", rep.query.l},
              {"r", rep.query.r},
              {"t", rep.query.t},
              {"s", rep.query.s},
              {"p", rep.query.p},
              {"q", rep.query.q},
              {"lower", rep.lower.edges},
              {"lower_branch", hx::to_string(rep.lower.branch)},
              {"upper", rep.upper.edges},
              {"upper_branch", hx::to_string(rep.upper.branch)}},
         "");
    return 0;
  }

  if (cmd_construct->parsed()) {
    std::optional<hx::Hypergraph> h;
    if (family == "complete") {
      h = hx::build_complete(n, r);
    } else if (family == "msh") {
      h = hx::build_msh(n, k, l, r);
    } else if (family == "dumbbell") {
      h = hx::build_dumbbell(t, r, p, l);
    } else if (family == "packedstar") {
      if (variant != "i" && variant != "ii")
        throw std::invalid_argument("--variant must be i or ii");
      h = hx::build_packed_star(n, a, k, r,
                                variant == "i" ? hx::PackedStarVariant::count_i
                                               : hx::PackedStarVariant::count_ii);
    } else {
      throw std::invalid_argument("unknown family '" + family +
                                  "' (expected complete|msh|dumbbell|packedstar)");
    }
    if (out_path.empty())
      hx::write_hypergraph(std::cout, *h);
    else
      hx::write_hypergraph_file(out_path, *h);
    return 0;
  }

  if (cmd_kappa->parsed()) {
    const hx::Hypergraph h = hx::read_hypergraph_file(in_path);
    const OracleChoice choice = parse_oracle(oracle);
    const bool use_oracle =
        choice == OracleChoice::on ||
        (choice == OracleChoice::automatic && h.vertex_count() <= hx::kKappaOracleMaxVertices);
    const hx::ConnectivityResult res =
        use_oracle ? hx::kappa_oracle(h) : hx::kappa_flow(h);
    json j{{"n", h.vertex_count()},
           {"r", h.uniformity()},
           {"edges", h.edge_count()},
           {"kappa", res.kappa},
           {"method", use_oracle ? "oracle" : "flow"}};
    j["witness"] = res.witness ? witness_json(*res.witness) : json(nullptr);
    emit(j, "");
    return 0;
  }

  if (cmd_verify->parsed()) {
    const hx::Hypergraph h = hx::read_hypergraph_file(in_path);
    const OracleChoice choice = parse_oracle(oracle);
    const bool use_oracle =
        choice == OracleChoice::on ||
        (choice == OracleChoice::automatic && h.vertex_count() <= oracle_engage_cap());
    const hx::MaximalityReport rep = hx::is_kl_edge_maximal(
        h, k, l, use_oracle ? hx::VerifyPath::oracle : hx::VerifyPath::fast);
    json j = report_json(rep);
    j["n"] = h.vertex_count();
    j["r"] = h.uniformity();
    j["k"] = k;
    j["l"] = l;
    j["path"] = use_oracle ? "oracle" : "fast";
    emit(j, "");
    if (rep.maximal) return 0;
    return rep.admissible ? 1 : 2;
  }

  if (cmd_maximalize->parsed()) {
    std::optional<hx::Hypergraph> h0;
    if (!in_path.empty())
      h0 = hx::read_hypergraph_file(in_path);
    else if (n > 0 && r > 0)
      h0 = hx::Hypergraph::build(n, r, {});
    else
      throw std::invalid_argument("maximalize needs an input file or --n and --r");
    const hx::Hypergraph result = hx::greedy_maximalize(*h0, k, l, seed);
    hx::write_hypergraph_file(out_path, result);
    const hx::ConnectivityResult conn = hx::edge_connectivity(result);
    emit(json{{"n", result.vertex_count()},
              {"r", result.uniformity()},
              {"k", k},
              {"l", l},
              {"seed", seed},
              {"initial_edges", h0->edge_count()},
              {"final_edges", result.edge_count()},
              {"kappa", conn.kappa},
              {"output", out_path}},
         "");
    return 0;
  }

  if (cmd_normalize->parsed()) {
    hx::SatelliteSpectrum sp =
        !spectrum_text.empty()
            ? parse_spectrum(k, r, l, spectrum_text)
            : (n > 0 ? hx::random_spectrum(n, k, l, r, seed)
                     : throw std::invalid_argument(
                           "normalize needs --spectrum or --n with --seed"));
    const hx::NormalizeResult res = hx::normalize(sp);
    const long long expect = hx::msh_edge_count(sp.vertex_total(), k, l, r);
    json steps = json::array();
    for (const auto& step : res.trace)
      steps.push_back({{"op", hx::to_string(step.op)},
                       {"delta", step.delta},
                       {"edges", step.edges_after}});
    emit(json{{"k", k},
              {"l", l},
              {"r", r},
              {"initial", spectrum_json(sp)},
              {"trace", steps},
              {"final", spectrum_json(res.spectrum)},
              {"upper_bound", expect},
              {"msh_match", res.spectrum == hx::msh_spectrum(sp.vertex_total(), k, l, r)}},
         "");
    return 0;
  }

  if (cmd_sweep->parsed()) {
    std::ostringstream csv;
    csv << "r,k,l,n,t,s,p,q,lower,lower_branch,upper,upper_branch,"
           "msh_edges,dumbbell_edges,msh_maximal,verify_path\n";
    const long long cap = oracle_engage_cap();
    bool violation = false;
    std::string first_violation;
    for (long long rr : {2, 3}) {
      for (long long kk : {2, 3, 4}) {
        const hx::ParamPair pp = hx::params(kk, rr);
        for (long long ll = pp.t + 1; ll <= pp.t + 4; ++ll) {
          for (long long nn = ll; nn <= std::min(ll + 6, max_n); ++nn) {
            const hx::BoundQuery q = hx::make_bound_query(nn, kk, ll, rr);
            const hx::BoundsReport rep = hx::bounds(q);
            const hx::Hypergraph msh = hx::build_msh(nn, kk, ll, rr);
            const bool use_oracle = nn <= cap;
            const hx::MaximalityReport ver = hx::is_kl_edge_maximal(
                msh, kk, ll, use_oracle ? hx::VerifyPath::oracle : hx::VerifyPath::fast);
            std::string dumbbell_edges;
            const long long tt = q.t;
            if (rr > 2 && tt > rr && kk == hx::binom(tt - 1, rr - 1) &&
                kk * rr >= 2 * tt && ll >= 2 * tt + 2 && (nn - ll) % tt == 0) {
              const hx::Hypergraph db = hx::build_dumbbell(tt, rr, (nn - ll) / tt, ll);
              dumbbell_edges = std::to_string(db.edge_count());
              if (db.edge_count() != rep.lower.edges) {
                violation = true;
                if (first_violation.empty())
                  first_violation = "dumbbell edge count mismatch at n=" + std::to_string(nn);
              }
            }
            csv << rr << ',' << kk << ',' << ll << ',' << nn << ',' << q.t << ',' << q.s
                << ',' << q.p << ',' << q.q << ',' << rep.lower.edges << ','
                << hx::to_string(rep.lower.branch) << ',' << rep.upper.edges << ','
                << hx::to_string(rep.upper.branch) << ',' << msh.edge_count() << ','
                << dumbbell_edges << ',' << (ver.maximal ? "true" : "false") << ','
                << (use_oracle ? "oracle" : "fast") << '\n';
            if (rep.lower.edges > rep.upper.edges || msh.edge_count() != rep.upper.edges ||
                !ver.maximal) {
              violation = true;
              if (first_violation.empty())
                first_violation = "row (r=" + std::to_string(rr) + ",k=" + std::to_string(kk) +
                                  ",l=" + std::to_string(ll) + ",n=" + std::to_string(nn) +
                                  ") violates bound/maximality invariants";
            }
          }
        }
      }
    }
    if (out_path.empty()) {
      std::cout << csv.str();
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
      out << csv.str();
    }
    if (violation) throw std::runtime_error("sweep found violations: " + first_violation);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << '\n';
    return 3;
  }
}
