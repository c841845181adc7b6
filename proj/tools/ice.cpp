#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ice/analysis.hpp"
#include "ice/boundary.hpp"
#include "ice/exact.hpp"

using namespace ice;

namespace {

// Exit codes, one per error class.
enum ExitCode {
  kOk = 0,
  kFormat = 2,
  kIllegalConfig = 3,
  kInfeasibleBoundary = 4,
  kNoMaximalTilt = 5,
  kCapacity = 6,
  kUndefinedRatio = 7,
  kBadArgument = 8,
  kIo = 9,
  kOther = 10,
};

struct CommonArgs {
  std::string lattice = "tri";
  int n = 0;
  std::string boundary = "cycle";
  std::string seed = "0";  // decimal integer: RNG seed; otherwise a start recipe
  std::string schedule;
  int threads = 1;
};

std::string g_cmdline;

HexDomain domain_of(const CommonArgs& a) {
  return build_domain(lattice_from_string(a.lattice), a.n);
}

BoundarySpec boundary_spec(const HexDomain& d, const std::string& s) {
  if (s == "cycle") return cycle_boundary(d);
  if (s == "split") return alternating_edge_split(d);
  if (s.rfind("sig:", 0) == 0) {
    std::array<int, 6> tilt{};
    std::stringstream ss(s.substr(4));
    std::string tok;
    for (int k = 0; k < 6; ++k) {
      if (!std::getline(ss, tok, ','))
        throw std::invalid_argument("signature needs six comma-separated tilts");
      tilt[k] = std::stoi(tok);
    }
    return from_signature(d, tilt);
  }
  throw std::invalid_argument("unknown boundary: " + s);
}

bool is_number(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

// A non-numeric --seed names the start configuration; the RNG seed is
// then 0, keeping a single source of randomness per run.
Configuration start_config(const HexDomain& d, const CommonArgs& a, std::uint64_t* rng) {
  *rng = 0;
  if (is_number(a.seed)) {
    *rng = std::stoull(a.seed);
    auto cfg = max_fill_in(d, boundary_spec(d, a.boundary));
    if (!cfg) throw infeasible_signature_error("boundary admits no ice configuration");
    return *cfg;
  }
  SeedRecipe r{};
  if (a.seed == "fig4a") r.tag = SeedTag::Fig4a;
  else if (a.seed == "fig4b") r.tag = SeedTag::Fig4b;
  else if (a.seed == "fig4c") r.tag = SeedTag::Fig4c;
  else if (a.seed == "fig4d") r.tag = SeedTag::Fig4d;
  else if (a.seed == "allcycles") r.tag = SeedTag::AllOneCycles;
  else if (a.seed.rfind("quadrant:", 0) == 0) {
    r.tag = SeedTag::QuadrantCross;
    r.x = std::stoi(a.seed.substr(9));
  } else {
    throw std::invalid_argument("unknown seed: " + a.seed);
  }
  return seed_config(d, r);
}

void write_manifest(const std::string& outPath, const CommonArgs& a,
                    const std::vector<std::pair<std::string, std::string>>& extra = {}) {
  std::ofstream m(outPath + ".manifest");
  if (!m) throw std::ios_base::failure("cannot write " + outPath + ".manifest");
  m << "command " << g_cmdline << "\n";
  m << "lattice " << a.lattice << "\n";
  m << "n " << a.n << "\n";
  m << "seed " << a.seed << "\n";
  m << "threads " << a.threads << "\n";
  m << "output " << outPath << "\n";
  for (const auto& [k, v] : extra) m << k << " " << v << "\n";
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot write " + path);
  f.write(bytes.data(), std::streamsize(bytes.size()));
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// ICECFG/ICESTATS headers start "<magic> <lattice> <N>"; rebuild the
// domain the file refers to.
HexDomain domain_of_header(const std::string& text, const std::string& magic) {
  std::stringstream ss(text);
  std::string word, lat;
  int n = 0;
  if (!(ss >> word >> lat >> n) || word != magic)
    throw format_error("expected a " + magic + " header");
  return build_domain(lattice_from_string(lat), n);
}

std::string stats_text(const HexDomain& d, const FlipStats& st) {
  std::ostringstream out;
  out << "ICESTATS " << to_string(d.kind) << " " << d.N << " " << st.sweeps << "\n";
  for (const auto& f : d.faces) out << f.id << " " << st.flips[f.id] << "\n";
  return out.str();
}

FlipStats stats_of_text(const HexDomain& d, const std::string& text, std::uint64_t* sweeps) {
  std::stringstream ss(text);
  std::string word, lat;
  int n = 0;
  FlipStats st;
  if (!(ss >> word >> lat >> n >> st.sweeps) || word != "ICESTATS")
    throw format_error("expected an ICESTATS header");
  st.flips.assign(d.faces.size(), 0);
  int id = 0;
  std::uint64_t c = 0;
  while (ss >> id >> c) {
    if (id < 0 || id >= int(d.faces.size())) throw format_error("face id out of range");
    st.flips[id] = c;
  }
  if (sweeps) *sweeps = st.sweeps;
  return st;
}

std::string sig_string(const HexDomain& d, const Configuration& c) {
  auto sig = signature_of(d, c);
  std::string out;
  for (int k = 0; k < 6; ++k) {
    if (k) out += ',';
    out += std::to_string(sig.tilt[k].num);
    if (sig.tilt[k].den != 1) out += "/" + std::to_string(sig.tilt[k].den);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) {
    if (i) g_cmdline += ' ';
    g_cmdline += argv[i];
  }

  CLI::App app{"ice-model configurations on hexagonal lattice domains"};
  app.require_subcommand(1);
  CommonArgs a;

  auto add_common = [&](CLI::App* sub, bool needDomain = true) {
    if (needDomain) {
      sub->add_option("--lattice", a.lattice, "tri | kagome | t3464");
      sub->add_option("--n", a.n, "hexagon size (even)")->required();
    }
    sub->add_option("--threads", a.threads, "worker threads");
    return sub;
  };

  // build
  std::string outPath;
  auto* cBuild = add_common(app.add_subcommand("build", "construct and export a domain"));
  cBuild->add_option("--out", outPath, "domain export file");

  // validate / height
  std::string cfgPath;
  auto* cValidate = app.add_subcommand("validate", "check a configuration file");
  cValidate->add_option("--config", cfgPath, "ICECFG file")->required();
  auto* cHeight = app.add_subcommand("height", "height function of a configuration");
  cHeight->add_option("--config", cfgPath, "ICECFG file")->required();
  cHeight->add_option("--out", outPath, "height table file");

  // sample
  std::uint64_t burnin = 0, window = 1000;
  std::string heatmapPath, statsPath;
  int pixels = 1;
  auto* cSample = add_common(app.add_subcommand("sample", "run the 1-cycle flip PCA"));
  cSample->add_option("--boundary", a.boundary, "sig:<6 tilts> | split | cycle");
  cSample->add_option("--seed", a.seed, "RNG seed, or a start recipe");
  cSample->add_option("--schedule", a.schedule, "comma list of fe,fo,fh,fl,fr,fs");
  cSample->add_option("--burnin", burnin, "sweeps before the stats window");
  cSample->add_option("--window", window, "sweeps counted into the stats");
  cSample->add_option("--heatmap", heatmapPath, "PGM output");
  cSample->add_option("--pixels", pixels, "pixels per lattice unit");
  cSample->add_option("--stats", statsPath, "flip-count table output");
  cSample->add_option("--out", outPath, "final configuration output");

  // enumerate / entropy / flipgraph
  std::optional<int> bracketX;
  double hbarOverride = -1;
  auto* cEnum = add_common(app.add_subcommand("enumerate", "count the fill-ins exactly"));
  cEnum->add_option("--boundary", a.boundary, "sig:<6 tilts> | split | cycle");
  auto* cEntropy = add_common(app.add_subcommand("entropy", "entropy per arrow"));
  cEntropy->add_option("--boundary", a.boundary, "sig:<6 tilts> | split | cycle");
  cEntropy->add_option("--bracket", bracketX, "also bracket the quadrant boundary at x");
  cEntropy->add_option("--hbar", hbarOverride, "free entropy estimate for the bracket");
  auto* cGraph = add_common(app.add_subcommand("flipgraph", "connectivity under 1-cycle flips"));
  cGraph->add_option("--boundary", a.boundary, "sig:<6 tilts> | split | cycle");
  cGraph->add_option("--schedule", a.schedule, "flip families to use");

  // heatmap / ratio from a stats table
  auto* cHeatmap = app.add_subcommand("heatmap", "render a flip-count table");
  cHeatmap->add_option("--stats", statsPath, "ICESTATS file")->required();
  cHeatmap->add_option("--out", outPath, "PGM output")->required();
  cHeatmap->add_option("--pixels", pixels, "pixels per lattice unit");
  std::string familyTok;
  cHeatmap->add_option("--family", familyTok, "restrict to one flip family");
  double radius = -1;
  auto* cRatio = app.add_subcommand("ratio", "triangle/hexagon flip ratio (Kagome)");
  cRatio->add_option("--stats", statsPath, "ICESTATS file")->required();
  cRatio->add_option("--radius", radius, "central disc radius (default N/6)");

  // bounds
  auto* cBounds = add_common(app.add_subcommand("bounds", "3.4.6.4 height-change bounds"));
  cBounds->add_option("--boundary", a.boundary, "sig:<6 tilts> | split | cycle");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cBuild->parsed()) {
      HexDomain d = domain_of(a);
      std::ostringstream out;
      export_domain(d, out);
      if (!outPath.empty()) {
        write_file(outPath, out.str());
        write_manifest(outPath, a);
      } else {
        std::cout << out.str();
      }
      std::cout << "domain " << a.lattice << " " << a.n << " vertices " << d.vertices.size()
                << " edges " << d.edges.size() << " faces " << d.faces.size() << "\n";
    } else if (cValidate->parsed()) {
      std::string text = read_file(cfgPath);
      HexDomain d = domain_of_header(text, "ICECFG");
      std::istringstream in(text);
      Configuration c = read_config(d, in);
      auto bad = ice_violations(d, c);
      if (!bad.empty())
        throw invalid_config_error("ice rule fails at " + std::to_string(bad.size()) +
                                   " interior vertices");
      std::cout << "OK\n";
    } else if (cHeight->parsed()) {
      std::string text = read_file(cfgPath);
      HexDomain d = domain_of_header(text, "ICECFG");
      std::istringstream in(text);
      Configuration c = read_config(d, in);
      HeightField h = height_field(d, c);
      std::ostringstream out;
      out << "ICEHGT " << to_string(d.kind) << " " << d.N << "\n";
      for (std::size_t i = 0; i < h.h.size(); ++i) out << i << " " << h.h[i] << "\n";
      if (!outPath.empty()) {
        write_file(outPath, out.str());
        a.lattice = to_string(d.kind), a.n = d.N;
        write_manifest(outPath, a);
      } else {
        std::cout << out.str();
      }
      std::cout << "signature " << sig_string(d, c) << "\n";
    } else if (cSample->parsed()) {
      HexDomain d = domain_of(a);
      std::uint64_t rng = 0;
      SamplerState st{start_config(d, a, &rng), rng, 0};
      Schedule sched = a.schedule.empty() ? default_schedule(d.kind)
                                          : schedule_from_string(d.kind, a.schedule);
      run_sampler(d, st, sched, burnin, a.threads);
      FlipStats stats;
      run_sampler(d, st, sched, window, a.threads, &stats);
      std::uint64_t total = 0;
      for (auto c : stats.flips) total += c;
      std::cout << "flips " << total << " sweeps " << stats.sweeps << " signature "
                << sig_string(d, st.cfg) << "\n";
      if (!statsPath.empty()) {
        write_file(statsPath, stats_text(d, stats));
        write_manifest(statsPath, a, {{"schedule", to_string(sched)}});
      }
      if (!heatmapPath.empty()) {
        std::ostringstream out;
        write_pgm(heatmap(d, stats, pixels), out);
        write_file(heatmapPath, out.str());
        write_manifest(heatmapPath, a, {{"schedule", to_string(sched)}});
      }
      if (!outPath.empty()) {
        std::ostringstream out;
        write_config(d, st.cfg, out);
        write_file(outPath, out.str());
        write_manifest(outPath, a, {{"schedule", to_string(sched)}});
      }
    } else if (cEnum->parsed()) {
      HexDomain d = domain_of(a);
      auto res = enumerate_fill_ins(d, boundary_spec(d, a.boundary), 0);
      std::cout << "count " << res.count << "\n";
    } else if (cEntropy->parsed()) {
      HexDomain d = domain_of(a);
      auto res = enumerate_fill_ins(d, boundary_spec(d, a.boundary), 0);
      std::cout << "count " << res.count << "\n";
      std::cout << "entropy " << entropy_of(d, res.count) << "\n";
      if (bracketX) {
        FreeEntropyEstimate hbar;
        if (hbarOverride >= 0) hbar.value = hbarOverride;
        else hbar = estimate_free_entropy(d.kind);
        auto [lo, up] = entropy_bracket(d, *bracketX, hbar);
        std::cout << "bracket " << lo << " " << up << " hbar " << hbar.value << "\n";
      }
    } else if (cGraph->parsed()) {
      HexDomain d = domain_of(a);
      auto res = enumerate_fill_ins(d, boundary_spec(d, a.boundary));
      if (res.truncated) throw capacity_error("too many fill-ins to store");
      Schedule sched = a.schedule.empty() ? default_schedule(d.kind)
                                          : schedule_from_string(d.kind, a.schedule);
      auto g = flip_graph(d, res.configs, sched.passes);
      std::cout << "nodes " << g.nodes << " edges " << g.edges << " components "
                << g.components << "\n";
    } else if (cHeatmap->parsed()) {
      std::string text = read_file(statsPath);
      HexDomain d = domain_of_header(text, "ICESTATS");
      FlipStats stats = stats_of_text(d, text, nullptr);
      std::optional<FlipFamily> fam;
      if (!familyTok.empty()) fam = family_from_string(familyTok);
      std::ostringstream out;
      write_pgm(heatmap(d, stats, pixels, fam), out);
      write_file(outPath, out.str());
      a.lattice = to_string(d.kind), a.n = d.N;
      write_manifest(outPath, a);
      std::cout << "wrote " << outPath << "\n";
    } else if (cRatio->parsed()) {
      std::string text = read_file(statsPath);
      HexDomain d = domain_of_header(text, "ICESTATS");
      FlipStats stats = stats_of_text(d, text, nullptr);
      double r = radius > 0 ? radius : d.N / 6.0;
      std::cout << "ratio " << flip_ratio(d, stats, r) << "\n";
    } else if (cBounds->parsed()) {
      HexDomain d = domain_of(a);
      BoundarySpec s = boundary_spec(d, a.boundary);
      auto cfg = max_fill_in(d, s);
      if (!cfg) throw infeasible_signature_error("boundary admits no ice configuration");
      auto rep = check_3464_bounds(d, s, &*cfg);
      std::cout << "blocks " << (rep.blockBoundsHold ? "ok" : "violated") << " slack "
                << rep.worstBlockSlack << "\n";
      std::cout << "unidirectional " << *rep.unidirectionalFraction << " density "
                << (rep.densityOk ? "ok" : "violated") << "\n";
      std::cout << "tilt-ceiling " << rep.tiltCeiling << "\n";
      std::cout << "y-plaquette " << (y_plaquette_property(d) ? "ok" : "violated") << "\n";
    }
  } catch (const format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFormat;
  } catch (const invalid_config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIllegalConfig;
  } catch (const infeasible_signature_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasibleBoundary;
  } catch (const no_maximal_tilt_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoMaximalTilt;
  } catch (const capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const undefined_ratio_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUndefinedRatio;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgument;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOk;
}
