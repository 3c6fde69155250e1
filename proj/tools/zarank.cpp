// Command-line front end: instance generation, bound certification,
// brute-force oracles, representation conversions, bound tables, and a small
// benchmark suite. Exit codes: 0 success / within bound / no biclique,
// 2 biclique found, 1 error.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zarank/certify.hpp"
#include "zarank/chain3.hpp"
#include "zarank/construct.hpp"
#include "zarank/convert.hpp"
#include "zarank/geom.hpp"
#include "zarank/gig.hpp"
#include "zarank/json_io.hpp"
#include "zarank/oracle.hpp"
#include "zarank/sample.hpp"

using namespace zarank;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_biclique = 2;

oracle::limits env_limits() {
  oracle::limits caps;
  if (const char* s = std::getenv("ZARANK_ORACLE_MAX_SIDE")) caps.max_side = std::atoi(s);
  if (const char* s = std::getenv("ZARANK_ORACLE_MAX_K")) caps.max_k = std::atoi(s);
  return caps;
}

void emit_instance(const std::string& out, const representation& rep,
                   const std::vector<int>* u_ids = nullptr,
                   const std::vector<int>* v_ids = nullptr) {
  if (out.empty())
    std::cout << io::instance_to_json(rep, u_ids, v_ids).dump(2) << "\n";
  else
    io::write_instance(out, rep, u_ids, v_ids);
}

struct certify_route {
  certificate cert;
  std::string route;
};

certify_route run_certify(const representation& rep, int k) {
  switch (rep.cls) {
    case rep_class::sr:
      return {certify::certify_sr(rep, k), "sr"};
    case rep_class::gig:
      return {certify::certify_gig(rep, k), "gig"};
    case rep_class::chain3_brc:
      return {certify::certify_chain3(rep, k), "chain3"};
    case rep_class::chain:
    case rep_class::conv:
    case rep_class::interval_containment: {
      auto g = build_graph(rep);
      auto ord = certify::gamma_free_order(g);
      if (ord.status == certify::order_status::none_exists)
        throw std::runtime_error(
            "no gamma-free ordering exists; the instance is not chordal bipartite");
      if (ord.status == certify::order_status::not_found)
        throw std::runtime_error(
            "gamma-free ordering not found (instance too large for the exhaustive fallback)");
      return {certify::certify_chordal(g, ord.row_order, ord.col_order, k), "chordal"};
    }
    case rep_class::prig:
      throw std::runtime_error("no class bound certifier covers prig instances");
  }
  throw std::runtime_error("unreachable");
}

struct bench_row {
  std::string name;
  std::string route;
  int m = 0, n = 0, k = 0;
  std::size_t edges = 0;
  std::string result;
  int stage = 0;  // 0 = none
  double ms = 0;
};

bench_row bench_one(const std::string& name, const representation& rep, int k) {
  bench_row row;
  row.name = name;
  row.m = static_cast<int>(rep.u_objects.size());
  row.n = static_cast<int>(rep.v_objects.size());
  row.k = k;
  row.edges = build_graph(rep).edge_count();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    auto [cert, route] = run_certify(rep, k);
    row.route = route;
    row.result = cert.is_within_bound() ? "within_bound" : "biclique";
    row.stage = cert.extraction_stage.value_or(0);
  } catch (const std::exception& e) {
    row.result = std::string("error: ") + e.what();
  }
  const auto t1 = std::chrono::steady_clock::now();
  row.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constructive biclique-vs-bound certification for geometric bipartite graphs"};
  app.require_subcommand(1);

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate instance files");
  gen->require_subcommand(1);
  std::string gen_out;

  int ugig_t = 1;
  auto* gen_ugig = gen->add_subcommand("ugig", "unit grid lower-bound instance");
  gen_ugig->add_option("--t", ugig_t, "grid parameter")->required();
  gen_ugig->add_option("--out", gen_out, "output file (stdout if omitted)");

  int lb_m = 3, lb_n = 3, lb_k = 2;
  auto* gen_lb = gen->add_subcommand("chain-lb", "chain lower-bound instance");
  gen_lb->add_option("--m", lb_m, "number of points")->required();
  gen_lb->add_option("--n", lb_n, "number of rays")->required();
  gen_lb->add_option("--k", lb_k, "forbidden biclique order")->required();
  gen_lb->add_option("--out", gen_out, "output file (stdout if omitted)");

  int grid_m = 2, grid_n = 2;
  auto* gen_grid = gen->add_subcommand("grid", "complete bipartite grid");
  gen_grid->add_option("--m", grid_m, "horizontal segments")->required();
  gen_grid->add_option("--n", grid_n, "vertical segments")->required();
  gen_grid->add_option("--out", gen_out, "output file (stdout if omitted)");

  std::string rnd_class = "gig";
  int rnd_m = 10, rnd_n = 10;
  std::uint64_t rnd_seed = 0;
  long long rnd_box = -1, rnd_maxlen = -1;
  auto* gen_rnd = gen->add_subcommand("random", "seeded uniform random instance");
  gen_rnd->add_option("--class", rnd_class, "representation class")->required();
  gen_rnd->add_option("--m", rnd_m, "u-side count")->required();
  gen_rnd->add_option("--n", rnd_n, "v-side count")->required();
  gen_rnd->add_option("--seed", rnd_seed, "rng seed")->required();
  gen_rnd->add_option("--box", rnd_box, "coordinate box (default 4(m+n))");
  gen_rnd->add_option("--max-len", rnd_maxlen, "maximum object extent (default box)");
  gen_rnd->add_option("--out", gen_out, "output file (stdout if omitted)");

  std::string dup_input;
  int dup_k = 2;
  auto* gen_dup = gen->add_subcommand("duplicate", "k-1 coincident copies of every object");
  gen_dup->add_option("--input", dup_input, "instance file")->required();
  gen_dup->add_option("--k", dup_k, "target forbidden order")->required();
  gen_dup->add_option("--out", gen_out, "output file (stdout if omitted)");

  // ---- certify ------------------------------------------------------------
  std::string cert_file, cert_out;
  int cert_k = 2;
  auto* certify_cmd = app.add_subcommand("certify", "edge-bound certificate or biclique");
  certify_cmd->add_option("file", cert_file, "instance file")->required();
  certify_cmd->add_option("--k", cert_k, "forbidden biclique order")->required();
  certify_cmd->add_option("--out", cert_out, "certificate file");

  // ---- oracle -------------------------------------------------------------
  std::string oracle_file, oracle_witness;
  int oracle_k = 2;
  int oracle_max_side = -1, oracle_max_k = -1;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive biclique search / witness check");
  oracle_cmd->add_option("file", oracle_file, "instance file")->required();
  oracle_cmd->add_option("--k", oracle_k, "biclique order")->required();
  oracle_cmd->add_option("--witness", oracle_witness, "certificate file to verify");
  oracle_cmd->add_option("--max-side", oracle_max_side, "cap override");
  oracle_cmd->add_option("--max-k", oracle_max_k, "cap override");

  // ---- convert ------------------------------------------------------------
  std::vector<std::string> conv_files;
  std::string conv_to, conv_out;
  auto* convert_cmd = app.add_subcommand("convert", "representation conversions");
  convert_cmd->add_option("files", conv_files, "input file(s)")->required();
  convert_cmd
      ->add_option("--to", conv_to,
                   "conv2-factors | chain3-factors | chain3 | gig-prig | flip")
      ->required();
  convert_cmd->add_option("--out", conv_out, "output file or base path")->required();

  // ---- bounds -------------------------------------------------------------
  std::string bounds_class;
  long long bounds_m = 0, bounds_n = 0;
  int bounds_k = 2, bounds_d = 3;
  auto* bounds_cmd = app.add_subcommand("bounds", "edge-bound table row");
  bounds_cmd->add_option("--class", bounds_class, "chordal | sr | chain3 | gig | chaind")
      ->required();
  bounds_cmd->add_option("--m", bounds_m, "u-side count")->required();
  bounds_cmd->add_option("--n", bounds_n, "v-side count")->required();
  bounds_cmd->add_option("--k", bounds_k, "forbidden biclique order")->required();
  bounds_cmd->add_option("--d", bounds_d, "Ferrers dimension (chaind only)");

  // ---- bench --------------------------------------------------------------
  std::uint64_t bench_seed = 1;
  int bench_jobs = 1;
  auto* bench_cmd = app.add_subcommand("bench", "built-in certification benchmark");
  bench_cmd->add_option("--seed", bench_seed, "rng seed for the random instances");
  bench_cmd->add_option("--jobs", bench_jobs, "parallel workers");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_ugig->parsed()) {
      emit_instance(gen_out, construct::ugig_construction(ugig_t));
      return exit_ok;
    }
    if (gen_lb->parsed()) {
      emit_instance(gen_out, construct::chain_lower_bound(lb_m, lb_n, lb_k));
      return exit_ok;
    }
    if (gen_grid->parsed()) {
      emit_instance(gen_out, construct::complete_grid(grid_m, grid_n));
      return exit_ok;
    }
    if (gen_rnd->parsed()) {
      sample::sample_options opt;
      opt.box = rnd_box;
      opt.max_len = rnd_maxlen;
      emit_instance(gen_out, sample::sample_representation(parse_rep_class(rnd_class),
                                                           rnd_m, rnd_n, rnd_seed, opt));
      return exit_ok;
    }
    if (gen_dup->parsed()) {
      emit_instance(gen_out, construct::duplicate(io::read_instance(dup_input).rep, dup_k));
      return exit_ok;
    }

    if (certify_cmd->parsed()) {
      auto rep = io::read_instance(cert_file).rep;
      auto [cert, route] = run_certify(rep, cert_k);
      if (!cert_out.empty()) io::write_certificate(cert_out, cert);
      if (cert.is_within_bound()) {
        std::cout << "within_bound route=" << route << " bound=" << cert.bound().bound_value
                  << " edges=" << build_graph(rep).edge_count() << "\n";
        return exit_ok;
      }
      std::cout << "biclique route=" << route << " k="
                << cert.witness().u_vertices.size();
      if (cert.extraction_stage) std::cout << " stage=" << *cert.extraction_stage;
      std::cout << "\n";
      return exit_biclique;
    }

    if (oracle_cmd->parsed()) {
      auto rep = io::read_instance(oracle_file).rep;
      auto g = build_graph(rep);
      if (!oracle_witness.empty()) {
        auto cert = io::certificate_from_json(io::json::parse(io::read_file(oracle_witness)));
        if (cert.is_within_bound())
          throw std::runtime_error("certificate does not carry a biclique witness");
        const bool ok = oracle::verify_witness(g, cert.witness());
        std::cout << (ok ? "valid" : "invalid") << "\n";
        return ok ? exit_ok : exit_error;
      }
      auto caps = env_limits();
      if (oracle_max_side > 0) caps.max_side = oracle_max_side;
      if (oracle_max_k > 0) caps.max_k = oracle_max_k;
      auto w = oracle::find_biclique(g, oracle_k, caps);
      if (!w) {
        std::cout << "none\n";
        return exit_ok;
      }
      std::cout << io::json{{"u", w->u_vertices}, {"v", w->v_vertices}}.dump() << "\n";
      return exit_biclique;
    }

    if (convert_cmd->parsed()) {
      auto need_files = [&](std::size_t n) {
        if (conv_files.size() != n)
          throw std::runtime_error("--to " + conv_to + " expects " + std::to_string(n) +
                                   " input file(s)");
      };
      if (conv_to == "conv2-factors") {
        need_files(1);
        auto rep = io::read_instance(conv_files[0]).rep;
        auto [fx, fy] = rep.cls == rep_class::prig ? convert::prig_to_conv2(rep)
                                                   : convert::gig_to_conv2(rep);
        io::write_instance(conv_out + ".x.json", fx.rep, &fx.u_ids, &fx.v_ids);
        io::write_instance(conv_out + ".y.json", fy.rep, &fy.u_ids, &fy.v_ids);
        std::cout << conv_out << ".x.json " << conv_out << ".y.json\n";
      } else if (conv_to == "chain3-factors") {
        need_files(1);
        auto rep = io::read_instance(conv_files[0]).rep;
        auto [fx, fy] = convert::chain3_projections(rep);
        io::write_instance(conv_out + ".x.json", fx);
        io::write_instance(conv_out + ".y.json", fy);
        std::cout << conv_out << ".x.json " << conv_out << ".y.json\n";
      } else if (conv_to == "chain3") {
        need_files(2);
        auto fx = io::read_instance(conv_files[0]).rep;
        auto fy = io::read_instance(conv_files[1]).rep;
        io::write_instance(conv_out, convert::assemble_chain3(fx, fy));
        std::cout << conv_out << "\n";
      } else if (conv_to == "gig-prig") {
        need_files(2);
        auto load_labeled = [](const std::string& path) {
          auto parsed = io::read_instance(path);
          convert::labeled_rep lr;
          lr.rep = parsed.rep;
          if (parsed.u_ids && parsed.v_ids) {
            lr.u_ids = *parsed.u_ids;
            lr.v_ids = *parsed.v_ids;
          } else {
            lr = convert::with_default_ids(parsed.rep);
          }
          return lr;
        };
        auto parts = convert::conv2_decompose(load_labeled(conv_files[0]),
                                              load_labeled(conv_files[1]));
        io::write_instance(conv_out + ".prig.json", parts.prig.rep, &parts.prig.u_ids,
                           &parts.prig.v_ids);
        io::write_instance(conv_out + ".gig.json", parts.gig.rep, &parts.gig.u_ids,
                           &parts.gig.v_ids);
        std::cout << conv_out << ".prig.json " << conv_out << ".gig.json\n";
      } else if (conv_to == "flip") {
        need_files(1);
        io::write_instance(conv_out,
                           convert::flip_chain_rep(io::read_instance(conv_files[0]).rep));
        std::cout << conv_out << "\n";
      } else {
        throw std::runtime_error("unknown conversion target: " + conv_to);
      }
      return exit_ok;
    }

    if (bounds_cmd->parsed()) {
      long long value = 0;
      if (bounds_class == "chordal")
        value = (bounds_m + bounds_n) * (bounds_k - 1);
      else if (bounds_class == "sr")
        value = 2 * (bounds_m + bounds_n) * (bounds_k - 1);
      else if (bounds_class == "chain3")
        value = (3 * bounds_m + 6 * bounds_n) * (bounds_k - 1);
      else if (bounds_class == "gig")
        value = 27 * (bounds_m + bounds_n) * (bounds_k - 1);
      else if (bounds_class == "chaind")
        value = convert::chaind_bound(bounds_d, bounds_m, bounds_n, bounds_k);
      else
        throw std::runtime_error("unknown bound class: " + bounds_class);
      std::cout << bounds_class << " m=" << bounds_m << " n=" << bounds_n
                << " k=" << bounds_k;
      if (bounds_class == "chaind") std::cout << " d=" << bounds_d;
      std::cout << " bound=" << value << "\n";
      return exit_ok;
    }

    if (bench_cmd->parsed()) {
      std::vector<std::pair<std::string, std::pair<representation, int>>> suite;
      for (int t = 1; t <= 5; ++t)
        suite.push_back({"ugig-t" + std::to_string(t),
                         {construct::ugig_construction(t), 2}});
      suite.push_back({"chain-lb-30", {construct::chain_lower_bound(30, 30, 3), 3}});
      suite.push_back({"grid-28", {construct::complete_grid(28, 28), 2}});
      const char* classes[] = {"chain", "conv", "interval_containment", "sr", "gig",
                               "chain3_brc"};
      for (const char* cls : classes)
        for (int i = 0; i < 3; ++i)
          suite.push_back({std::string("random-") + cls + "-" + std::to_string(i),
                           {sample::sample_representation(parse_rep_class(cls), 40, 40,
                                                          bench_seed + i),
                            2 + i % 2}});

      std::vector<bench_row> rows(suite.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&]() {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= suite.size()) return;
          rows[i] = bench_one(suite[i].first, suite[i].second.first, suite[i].second.second);
        }
      };
      std::vector<std::future<void>> futures;
      for (int j = 0; j < std::max(1, bench_jobs); ++j)
        futures.push_back(std::async(std::launch::async, worker));
      for (auto& f : futures) f.get();

      std::printf("%-28s %-8s %5s %5s %3s %7s %-14s %5s %9s\n", "instance", "route", "m",
                  "n", "k", "edges", "result", "stage", "ms");
      int stages[4] = {0, 0, 0, 0};
      for (const auto& r : rows) {
        std::printf("%-28s %-8s %5d %5d %3d %7zu %-14s %5s %9.2f\n", r.name.c_str(),
                    r.route.c_str(), r.m, r.n, r.k, r.edges, r.result.c_str(),
                    r.stage ? std::to_string(r.stage).c_str() : "-", r.ms);
        if (r.stage >= 1 && r.stage <= 3) ++stages[r.stage];
      }
      std::printf("extraction stages: 1 -> %d, 2 -> %d, 3 -> %d\n", stages[1], stages[2],
                  stages[3]);
      return exit_ok;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}
