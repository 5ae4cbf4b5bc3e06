// Command-line front end. Everything goes through the C API.
#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "madstar/madstar.h"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::string format;
  bool json = false;
  std::uint64_t seed = 1;
  std::int64_t timeout_ms = 0;
};

Globals G;

// Thrown on bad input; carries the exit code 2 path.
struct CliError {
  std::string kind;
  std::string detail;
};

struct GraphHandle {
  madstar_graph* g = nullptr;
  GraphHandle() = default;
  explicit GraphHandle(madstar_graph* h) : g(h) {}
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
  GraphHandle(GraphHandle&& o) noexcept : g(o.g) { o.g = nullptr; }
  ~GraphHandle() { madstar_graph_free(g); }
};

struct CString {
  char* s = nullptr;
  ~CString() { madstar_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

[[noreturn]] void fail_from_library() {
  Json e = Json::parse(madstar_last_error());
  throw CliError{e.value("error", "internal"), e.value("detail", "")};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"io", "cannot open '" + path + "'"};
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string format_for(const std::string& path) {
  if (!G.format.empty()) return G.format;
  std::string ext = fs::path(path).extension().string();
  if (ext == ".g6") return "graph6";
  if (ext == ".col" || ext == ".dimacs") return "dimacs";
  if (ext == ".edges" || ext == ".el") return "edgelist";
  return "auto";
}

GraphHandle load_text(const std::string& text, const std::string& format) {
  madstar_graph* g = nullptr;
  if (madstar_graph_parse(text.data(), text.size(), format.c_str(), &g) != MADSTAR_OK) fail_from_library();
  return GraphHandle(g);
}

GraphHandle load_graph(const std::string& path) { return load_text(read_input(path), format_for(path)); }

std::vector<std::int32_t> parse_int_list(const std::string& text) {
  std::vector<std::int32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t pos = 0;
      long v = std::stol(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::int32_t>(v));
    } catch (const std::exception&) {
      throw CliError{"usage", "bad vertex '" + item + "'"};
    }
  }
  return out;
}

void render_human(const Json& j, int indent, std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "schema") continue;
    const Json& v = it.value();
    if (v.is_object()) {
      os << pad << it.key() << ":\n";
      render_human(v, indent + 2, os);
    } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); })) {
      os << pad << it.key() << ": " << v.size() << " entries\n";
      std::size_t shown = 0;
      for (const auto& e : v) {
        if (++shown > 20) {
          os << pad << "  ...\n";
          break;
        }
        os << pad << "  " << e.dump() << "\n";
      }
    } else if (v.is_array() && v.size() > 60) {
      os << pad << it.key() << ": " << v.size() << " values\n";
    } else if (v.is_string()) {
      os << pad << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      os << pad << it.key() << ": " << v.dump() << "\n";
    }
  }
}

void print_result(const std::string& text) {
  if (text.empty()) return;
  if (G.json) {
    std::cout << text << "\n";
    return;
  }
  render_human(Json::parse(text), 0, std::cout);
}

// Maps a library status to an exit code, printing the result when there is one.
int finish(int status, const CString& out) {
  if (status == MADSTAR_OK || status == MADSTAR_NEGATIVE || status == MADSTAR_TIMEOUT) {
    print_result(out.str());
    return status;
  }
  fail_from_library();
}

void print_graph(madstar_graph* g) {
  std::string fmt = G.format.empty() ? "graph6" : G.format;
  CString text;
  if (madstar_graph_serialize(g, fmt.c_str(), &text.s) != MADSTAR_OK) fail_from_library();
  std::cout << text.str();
  if (!text.str().empty() && text.str().back() != '\n') std::cout << "\n";
}

struct CorpusFile {
  std::string id;
  GraphHandle graph;
};

// A directory of graph files, or one file; graph6 files may hold one graph per line.
std::vector<CorpusFile> load_corpus(const std::string& where) {
  std::vector<fs::path> files;
  if (fs::is_directory(where)) {
    for (const auto& e : fs::directory_iterator(where))
      if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
  } else {
    files.emplace_back(where);
  }
  std::vector<CorpusFile> out;
  for (const auto& p : files) {
    std::string text = read_input(p.string());
    std::string fmt = format_for(p.string());
    std::string stem = p.stem().string();
    if (fmt == "graph6" || (fmt == "auto" && text.find(' ') == std::string::npos)) {
      std::vector<std::string> lines;
      std::stringstream ss(text);
      std::string line;
      while (std::getline(ss, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
      }
      const std::size_t width = std::to_string(lines.size()).size();
      for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string id = stem;
        if (lines.size() > 1) {
          std::string idx = std::to_string(i);
          id += "#" + std::string(width - idx.size(), '0') + idx;
        }
        out.push_back({id, load_text(lines[i], "graph6")});
      }
    } else {
      out.push_back({stem, load_text(text, fmt)});
    }
  }
  return out;
}

int emit_error(const CliError& e) {
  if (G.json) {
    Json j;
    j["schema"] = 1;
    j["error"] = e.kind;
    j["detail"] = e.detail;
    std::cout << j.dump() << "\n";
  } else {
    std::cerr << "error: " << e.kind << ": " << e.detail << "\n";
  }
  return e.kind == "internal" ? 4 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for star colorings, maximum average degree and forest/independent partitions", "madstar"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(madstar_version()));
  app.add_option("--format", G.format, "Graph format: graph6, edgelist, dimacs")
      ->check(CLI::IsMember({"graph6", "edgelist", "dimacs"}));
  app.add_flag("--json", G.json, "Print one JSON document");
  app.add_option("--seed", G.seed, "Random seed");
  app.add_option("--timeout-ms", G.timeout_ms, "Time limit in milliseconds (0: none)");

  std::string file;
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Graph file, or - for stdin")->required(); };

  int k = 2;
  std::string seed_list, coloring_path, partition_path, ids, config, match_path, plan, gadget, corpus, out_dir;
  std::string bound = "8/3";
  int limit = 0, n_max = 0, count = 500, n = 1;
  int at = -1, other = -1;
  bool force = false, greedy = false, no_forcing = false, builtin = false;

  auto* c_info = app.add_subcommand("info", "Counts, girth and vertex classes");
  add_file(c_info);
  auto* c_mad = app.add_subcommand("mad", "Exact maximum average degree with a densest witness");
  add_file(c_mad);
  auto* c_le = app.add_subcommand("mad-le-8-3", "Check mad <= 8/3; exit 1 with a violating set otherwise");
  add_file(c_le);
  auto* c_rho = app.add_subcommand("rho-star", "Minimum potential over supersets of a seed set");
  add_file(c_rho);
  c_rho->add_option("--seed", seed_list, "Comma-separated seed vertices (empty for none)");
  auto* c_sv = app.add_subcommand("star-verify", "Check a coloring is a star coloring");
  add_file(c_sv);
  c_sv->add_option("--coloring", coloring_path, "JSON coloring")->required();
  auto* c_sc = app.add_subcommand("star-color", "Exact star chromatic number");
  add_file(c_sc);
  c_sc->add_option("--limit", limit, "Largest palette to try")->check(CLI::PositiveNumber);
  c_sc->add_flag("--force", force, "Lift the vertex cap");
  c_sc->add_flag("--greedy", greedy, "Greedy coloring in degeneracy order instead");
  auto* c_ff = app.add_subcommand("fii-find", "Find a forest plus k 2-independent sets partition");
  add_file(c_ff);
  c_ff->add_option("-k", k, "Number of independent parts")->check(CLI::Range(0, 30));
  c_ff->add_flag("--no-forcing", no_forcing, "Disable the J1/J2 propagation rules");
  auto* c_fv = app.add_subcommand("fii-verify", "Check a partition");
  add_file(c_fv);
  c_fv->add_option("--partition", partition_path, "JSON partition")->required();
  c_fv->add_option("-k", k, "Number of independent parts")->check(CLI::Range(0, 30));
  auto* c_s5 = app.add_subcommand("star5", "Find a partition, convert it to a star 5-coloring, verify");
  add_file(c_s5);
  auto* c_bd = app.add_subcommand("boundary", "Feasibility sweep over a corpus");
  c_bd->add_option("-k", k, "Number of independent parts")->required()->check(CLI::Range(0, 30));
  c_bd->add_option("--corpus", corpus, "Directory or graph6 file");
  c_bd->add_flag("--builtin", builtin, "Add the generated corpus for k");
  c_bd->add_option("--n-max", n_max, "Skip graphs with more vertices (0: no cap)");
  auto* c_cs = app.add_subcommand("config-scan", "Find reducible configurations");
  add_file(c_cs);
  c_cs->add_option("--ids", ids, "Comma-separated list such as C5,Cp1");
  auto* c_lc = app.add_subcommand("lemma-check", "Check every partition of the reduced graph extends");
  add_file(c_lc);
  c_lc->add_option("--config", config, "Configuration id");
  c_lc->add_option("--match", match_path, "JSON match from config-scan");
  c_lc->add_option("--plan", plan, "Reduction plan overriding the catalog");
  auto* c_at = app.add_subcommand("attach", "Graft a gadget and print the new graph");
  add_file(c_at);
  c_at->add_option("--at", at, "Attachment vertex")->required();
  c_at->add_option("--gadget", gadget, "triangle, J1, J2, edge or path2")->required();
  c_at->add_option("--other", other, "Second endpoint for edge and path2");
  auto* c_dc = app.add_subcommand("discharge", "Charge table after rules R1-R4");
  add_file(c_dc);
  auto* c_da = app.add_subcommand("discharge-audit", "Vertices below 8/3 and nearby configurations");
  add_file(c_da);
  auto* c_tp = app.add_subcommand("terminal-partition", "Partition of a graph in the terminal structure");
  add_file(c_tp);
  auto* c_gen = app.add_subcommand("gen", "Generate graphs");
  c_gen->require_subcommand(1);
  auto* g_g5n = c_gen->add_subcommand("g5n", "The tightness family");
  g_g5n->add_option("-n", n, "Number of 5-cycle blocks")->required();
  auto* g_corpus = c_gen->add_subcommand("corpus", "Random graphs with bounded mad");
  g_corpus->add_option("--count", count, "Number of graphs");
  g_corpus->add_option("--n", n_max, "Largest vertex count")->required();
  g_corpus->add_option("--bound", bound, "mad bound as p/q");
  g_corpus->add_option("--out", out_dir, "Write one .g6 file per graph here");
  std::string family;
  auto* g_family = c_gen->add_subcommand("family", "Any family, e.g. cycle:7 or mad-bounded:10:8/3:7");
  g_family->add_option("spec", family, "Family spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error({"usage", e.what()});
  }

  try {
    CString out;
    if (*c_info) {
      auto g = load_graph(file);
      return finish(madstar_info(g.g, &out.s), out);
    }
    if (*c_mad) {
      auto g = load_graph(file);
      return finish(madstar_mad(g.g, &out.s), out);
    }
    if (*c_le) {
      auto g = load_graph(file);
      return finish(madstar_mad_le_8_3(g.g, &out.s), out);
    }
    if (*c_rho) {
      auto g = load_graph(file);
      auto s = parse_int_list(seed_list);
      return finish(madstar_rho_star(g.g, s.data(), s.size(), &out.s), out);
    }
    if (*c_sv) {
      auto g = load_graph(file);
      std::string text = read_input(coloring_path);
      return finish(madstar_star_verify_json(g.g, text.c_str(), &out.s), out);
    }
    if (*c_sc) {
      auto g = load_graph(file);
      if (greedy) return finish(madstar_star_greedy(g.g, &out.s), out);
      return finish(madstar_star_color(g.g, limit, force ? 1 : 0, G.timeout_ms, &out.s), out);
    }
    if (*c_ff) {
      auto g = load_graph(file);
      return finish(madstar_fii_find(g.g, k, no_forcing ? 0 : 1, G.timeout_ms, &out.s), out);
    }
    if (*c_fv) {
      auto g = load_graph(file);
      std::string text = read_input(partition_path);
      return finish(madstar_fii_verify_json(g.g, k, text.c_str(), &out.s), out);
    }
    if (*c_s5) {
      auto g = load_graph(file);
      return finish(madstar_star5(g.g, G.timeout_ms, &out.s), out);
    }
    if (*c_bd) {
      if (corpus.empty() && !builtin) throw CliError{"usage", "boundary needs --corpus or --builtin"};
      std::vector<CorpusFile> files;
      if (!corpus.empty()) files = load_corpus(corpus);
      std::vector<const madstar_graph*> graphs;
      std::vector<const char*> names;
      for (const auto& f : files) {
        graphs.push_back(f.graph.g);
        names.push_back(f.id.c_str());
      }
      return finish(madstar_boundary(k, n_max, graphs.data(), names.data(), graphs.size(), builtin ? 1 : 0, G.seed,
                                     G.timeout_ms, &out.s),
                    out);
    }
    if (*c_cs) {
      auto g = load_graph(file);
      return finish(madstar_config_scan(g.g, ids.empty() ? nullptr : ids.c_str(), &out.s), out);
    }
    if (*c_lc) {
      if (config.empty() && match_path.empty()) throw CliError{"usage", "lemma-check needs --config or --match"};
      auto g = load_graph(file);
      std::string match_text = match_path.empty() ? std::string() : read_input(match_path);
      return finish(madstar_lemma_check(g.g, config.empty() ? nullptr : config.c_str(),
                                        match_path.empty() ? nullptr : match_text.c_str(),
                                        plan.empty() ? nullptr : plan.c_str(), G.timeout_ms, &out.s),
                    out);
    }
    if (*c_at) {
      auto g = load_graph(file);
      madstar_graph* result = nullptr;
      int status = madstar_attach(g.g, at, gadget.c_str(), other, &result, &out.s);
      if (status != MADSTAR_OK) fail_from_library();
      GraphHandle h(result);
      Json report = Json::parse(out.str());
      if (G.json) {
        std::string fmt = G.format.empty() ? "graph6" : G.format;
        CString text;
        if (madstar_graph_serialize(h.g, fmt.c_str(), &text.s) != MADSTAR_OK) fail_from_library();
        report["format"] = fmt;
        report["graph"] = text.str();
        std::cout << report.dump() << "\n";
      } else {
        if (report.contains("warning")) std::cerr << "warning: " << report["warning"].get<std::string>() << "\n";
        print_graph(h.g);
      }
      return 0;
    }
    if (*c_dc) {
      auto g = load_graph(file);
      return finish(madstar_discharge(g.g, &out.s), out);
    }
    if (*c_da) {
      auto g = load_graph(file);
      return finish(madstar_discharge_audit(g.g, &out.s), out);
    }
    if (*c_tp) {
      auto g = load_graph(file);
      return finish(madstar_terminal_partition(g.g, &out.s), out);
    }
    if (*g_g5n || *g_family) {
      std::string spec = *g_g5n ? "g5n:" + std::to_string(n) : family;
      madstar_graph* g = nullptr;
      if (madstar_generate(spec.c_str(), &g) != MADSTAR_OK) fail_from_library();
      GraphHandle h(g);
      if (G.json) {
        CString info;
        if (madstar_info(h.g, &info.s) != MADSTAR_OK) fail_from_library();
        CString text;
        if (madstar_graph_serialize(h.g, "graph6", &text.s) != MADSTAR_OK) fail_from_library();
        Json j = Json::parse(info.str());
        Json outj;
        outj["schema"] = 1;
        outj["family"] = spec;
        outj["n"] = j["n"];
        outj["m"] = j["m"];
        outj["graph6"] = text.str();
        std::cout << outj.dump() << "\n";
      } else {
        print_graph(h.g);
      }
      return 0;
    }
    if (*g_corpus) {
      int status = madstar_gen_corpus(count, n_max, bound.c_str(), G.seed, &out.s);
      if (status != MADSTAR_OK) fail_from_library();
      Json j = Json::parse(out.str());
      if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        for (const auto& item : j["graphs"]) {
          std::ofstream f(fs::path(out_dir) / (item["id"].get<std::string>() + ".g6"));
          f << item["graph6"].get<std::string>() << "\n";
          if (!f) throw CliError{"io", "cannot write to '" + out_dir + "'"};
        }
      }
      if (G.json) {
        std::cout << j.dump() << "\n";
      } else if (out_dir.empty()) {
        for (const auto& item : j["graphs"]) std::cout << item["graph6"].get<std::string>() << "\n";
      } else {
        std::cout << "wrote " << j["graphs"].size() << " graphs to " << out_dir << "\n";
      }
      return 0;
    }
  } catch (const CliError& e) {
    return emit_error(e);
  } catch (const std::exception& e) {
    return emit_error({"internal", e.what()});
  }
  return emit_error({"usage", "no command"});
}
