// Command-line surface: decide planarity of star-graph documents, emit and
// verify certificates, export web graphs as DOT, build graphs from Gauss
// words or random generators, and cross-validate the decision procedure
// against the brute-force obstruction search.
//
// Exit codes everywhere: 0 planar/valid/success, 1 nonplanar/invalid, 2
// input or usage error. All randomness flows through explicit --seed flags,
// so equal invocations produce byte-identical output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "starplan/generators.hpp"
#include "starplan/io.hpp"

#include "CLI11.hpp"

namespace {

using namespace starplan;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

StarGraph load_graph(const std::string& path) {
  return star_graph_from_json(parse_json_text(slurp(path)));
}

std::vector<int> parse_degree_menu(const std::string& text) {
  std::vector<int> menu;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int d = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("");
      menu.push_back(d);
    } catch (const std::exception&) {
      throw std::invalid_argument("--degrees expects a comma-separated list of even numbers, got \"" +
                                  item + "\"");
    }
  }
  if (menu.empty()) throw std::invalid_argument("--degrees must list at least one degree");
  return menu;
}

long long cycle_cap_from_env(long long fallback) {
  const char* s = std::getenv("STARPLAN_CYCLE_CAP");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  long long v = std::strtoll(s, &end, 10);
  if (end == s || *end != '\0' || v < 1)
    throw std::invalid_argument("STARPLAN_CYCLE_CAP must be a positive integer");
  return v;
}

int run_check(const std::string& input, const std::string& cert_path) {
  StarGraph g = load_graph(input);
  if (auto emb = star_is_planar(g)) {
    Json cert = embedding_certificate(g, *emb);
    if (!cert_path.empty()) spill(cert_path, write_json(cert));
    std::cout << "planar: " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges, " << cert["faces"].size() << " faces\n";
    return 0;
  }
  NonplanarityWitness w = classify_nonplanar(g);
  Json cert = witness_certificate(g, w);
  if (!cert_path.empty()) spill(cert_path, write_json(cert));
  if (const auto* ob = std::get_if<VassilievObstruction>(&w))
    std::cout << "nonplanar: vassiliev obstruction crossing at vertex \""
              << g.vname(ob->crossing.vertex) << "\"\n";
  else
    std::cout << "nonplanar: embedded K3,3 witness\n";
  return 1;
}

int run_verify(const std::string& input, const std::string& cert_path) {
  StarGraph g = load_graph(input);
  Json cert = parse_json_text(slurp(cert_path));
  CertificateOutcome outcome = verify_certificate(g, cert);
  std::cout << outcome.message << "\n";
  return outcome.exit_code;
}

int run_obstruct(const std::string& input, const std::string& cert_path) {
  StarGraph g = load_graph(input);
  if (star_is_planar(g)) {
    std::cout << "graph is planar\n";
    return 1;
  }
  NonplanarityWitness w =
      is_even(g) ? NonplanarityWitness{extract_obstruction(g)} : classify_nonplanar(g);
  Json cert = witness_certificate(g, w);
  if (!cert_path.empty()) spill(cert_path, write_json(cert));
  if (const auto* ob = std::get_if<VassilievObstruction>(&w))
    std::cout << "vassiliev obstruction: cycles of " << ob->c1.size() << " and "
              << ob->c2.size() << " edges crossing at vertex \""
              << g.vname(ob->crossing.vertex) << "\"\n";
  else
    std::cout << "embedded K3,3 witness\n";
  return 0;
}

int run_embed(const std::string& input, const std::string& cert_path) {
  StarGraph g = load_graph(input);
  auto emb = star_is_planar(g);
  if (!emb) {
    std::cout << "graph is nonplanar\n";
    return 1;
  }
  Json cert = embedding_certificate(g, *emb);
  if (!cert_path.empty()) spill(cert_path, write_json(cert));
  std::cout << "planar: " << cert["faces"].size() << " faces\n";
  return 0;
}

int run_web(const std::string& input, const std::string& out_path) {
  StarGraph g = load_graph(input);
  spill(out_path, web_graph_to_dot(build_web_graph(g)));
  return 0;
}

int run_gauss(const std::string& word, const std::string& out_path) {
  StarGraph g = from_gauss_word(word);
  spill(out_path, write_json(star_graph_to_json(g)));
  return 0;
}

int run_gen(int vertices, const std::string& degrees, Seed seed, bool planar,
            const std::string& out_path) {
  StarGraph g = planar ? random_planar_star_graph(vertices, seed)
                       : random_even_star_graph(vertices, parse_degree_menu(degrees), seed);
  spill(out_path, write_json(star_graph_to_json(g)));
  return 0;
}

int run_crossval(long long trials, int max_vertices, Seed seed, const std::string& csv_path,
                 long long cycle_cap, bool flip_one_crossing) {
  std::ostringstream csv;
  csv << "trial,vertices,edges,planar,bruteforce,agree,certified,note\n";

  long long decided = 0, planar_count = 0, nonplanar_count = 0;
  long long agreements = 0, disagreements = 0, capacity = 0;
  long long certified = 0, cert_failures = 0;
  bool fault_pending = flip_one_crossing;

  std::mt19937_64 top(seed);
  const std::vector<int> menu{2, 4, 6};
  for (long long t = 0; t < trials; ++t) {
    int n = 1 + static_cast<int>(top() % static_cast<unsigned>(max_vertices));
    Seed gseed = top();
    StarGraph g;
    try {
      g = random_even_star_graph(n, menu, gseed);
    } catch (const capacity_error&) {
      ++capacity;
      csv << t << "," << n << ",,,,,," << "generator-capacity\n";
      continue;
    }

    auto emb = star_is_planar(g);
    std::optional<VassilievObstruction> bf;
    try {
      bf = find_obstruction_bruteforce(g, cycle_cap);
    } catch (const capacity_error&) {
      ++capacity;
      csv << t << "," << g.vertex_count() << "," << g.edge_count() << ","
          << (emb ? 1 : 0) << ",capacity,,," << "bruteforce-capacity\n";
      continue;
    }

    ++decided;
    bool agree = emb.has_value() == !bf.has_value();
    (agree ? agreements : disagreements) += 1;

    bool cert_ok;
    if (emb) {
      ++planar_count;
      cert_ok = verify_certificate(g, embedding_certificate(g, *emb)).valid();
    } else {
      ++nonplanar_count;
      VassilievObstruction ob = extract_obstruction(g);
      Json cert = witness_certificate(g, ob);
      if (fault_pending) {
        auto& pos = cert["crossing"]["first"]["positions"];
        pos[0] = (pos[0].get<int>() + 1) % g.degree(ob.crossing.vertex);
        fault_pending = false;
      }
      cert_ok = verify_certificate(g, cert).valid();
    }
    (cert_ok ? certified : cert_failures) += 1;

    csv << t << "," << g.vertex_count() << "," << g.edge_count() << "," << (emb ? 1 : 0)
        << "," << (bf ? "found" : "none") << "," << (agree ? 1 : 0) << ","
        << (cert_ok ? 1 : 0) << ",\n";
  }

  csv << "# trials=" << trials << " decided=" << decided << " planar=" << planar_count
      << " nonplanar=" << nonplanar_count << " agreements=" << agreements
      << " disagreements=" << disagreements << " capacity=" << capacity
      << " certified=" << certified << " cert_failures=" << cert_failures << "\n";

  if (csv_path.empty() || csv_path == "-") {
    std::cout << csv.str();
  } else {
    spill(csv_path, csv.str());
    std::cout << "disagreements=" << disagreements << " cert_failures=" << cert_failures
              << "\n";
  }
  return (disagreements == 0 && cert_failures == 0) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planarity of star-graphs with verifiable certificates"};
  app.require_subcommand(1);

  std::string input, cert_path, out_path, word, csv_path, degrees = "4";
  int vertices = 4, max_vertices = 6;
  long long trials = 100, cycle_cap_flag = 0;
  Seed seed = 0;
  bool planar_gen = false, flip_one_crossing = false;

  auto* check = app.add_subcommand("check", "decide planarity of a star-graph document");
  check->add_option("input", input, "star-graph JSON file, or - for stdin")->required();
  check->add_option("--certificate", cert_path, "write the certificate JSON here");

  auto* verify = app.add_subcommand("verify", "validate a certificate against a graph");
  verify->add_option("input", input, "star-graph JSON file, or - for stdin")->required();
  verify->add_option("certificate", cert_path, "certificate JSON file")->required();

  auto* obstruct =
      app.add_subcommand("obstruct", "produce a nonplanarity witness certificate");
  obstruct->add_option("input", input, "star-graph JSON file, or - for stdin")->required();
  obstruct->add_option("--certificate", cert_path, "write the witness JSON here");

  auto* embed = app.add_subcommand("embed", "produce a planar embedding certificate");
  embed->add_option("input", input, "star-graph JSON file, or - for stdin")->required();
  embed->add_option("--certificate", cert_path, "write the embedding JSON here");

  auto* web = app.add_subcommand("web", "export the web graph as DOT");
  web->add_option("input", input, "star-graph JSON file, or - for stdin")->required();
  web->add_option("--output", out_path, "write the DOT text here (default stdout)");

  auto* gauss = app.add_subcommand("gauss", "star-graph of a double-occurrence word");
  gauss->add_option("word", word, "double-occurrence word, e.g. abab")->required();
  gauss->add_option("--output", out_path, "write the document here (default stdout)");

  auto* gen = app.add_subcommand("gen", "random star-graph documents");
  gen->add_option("--vertices", vertices, "vertex count (face budget with --planar)")
      ->check(CLI::PositiveNumber);
  gen->add_option("--degrees", degrees, "comma-separated even degree menu (default 4)");
  gen->add_option("--seed", seed, "random seed");
  gen->add_flag("--planar", planar_gen, "grow a guaranteed-planar graph instead");
  gen->add_option("--output", out_path, "write the document here (default stdout)");

  auto* crossval =
      app.add_subcommand("crossval", "cross-validate the criterion against brute force");
  crossval->add_option("--trials", trials, "number of random even graphs")
      ->check(CLI::PositiveNumber);
  crossval->add_option("--max-vertices", max_vertices, "largest vertex count sampled")
      ->check(CLI::PositiveNumber);
  crossval->add_option("--seed", seed, "random seed");
  crossval->add_option("--csv", csv_path, "write per-trial CSV here (default stdout)");
  crossval->add_option("--cycle-cap", cycle_cap_flag,
                       "brute-force cycle cap (default 100000, or STARPLAN_CYCLE_CAP)")
      ->check(CLI::PositiveNumber);
  crossval->add_flag("--flip-one-crossing", flip_one_crossing)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(input, cert_path);
    if (*verify) return run_verify(input, cert_path);
    if (*obstruct) return run_obstruct(input, cert_path);
    if (*embed) return run_embed(input, cert_path);
    if (*web) return run_web(input, out_path);
    if (*gauss) return run_gauss(word, out_path);
    if (*gen) return run_gen(vertices, degrees, seed, planar_gen, out_path);
    if (*crossval) {
      long long cap = cycle_cap_flag > 0 ? cycle_cap_flag : cycle_cap_from_env(100000);
      return run_crossval(trials, max_vertices, seed, csv_path, cap, flip_one_crossing);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
