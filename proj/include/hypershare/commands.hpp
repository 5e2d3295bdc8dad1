#pragma once

// Implementations of the CLI verbs. Each returns the process exit status and
// writes reports to `out`, diagnostics to `err`.
//
// Exit statuses:
//   0 success
//   2 PARSE_ERROR
//   3 NOT_CONNECTED, UNIFORMITY_ERROR, INVALID_HYPERGRAPH
//   4 cluster validation failures (NOT_PATH_CONNECTED, HAS_CYCLE,
//     COMPONENT_NOT_CONNECTED, EDGE_OUTSIDE_COMPONENTS, INVALID_CLUSTER)
//   5 TOO_LARGE
//   6 verification failed (zero_error false, SINGULAR_SYSTEM, INCONSISTENT,
//     or an entropy inequality violated)
//   7 UNKNOWN_FIXTURE
//   8 INVALID_STRATEGY, DOMAIN_MISMATCH
//   9 I/O failure

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "hypershare/entropy.hpp"
#include "hypershare/error.hpp"
#include "hypershare/hypergraph.hpp"
#include "hypershare/io.hpp"
#include "hypershare/simulate.hpp"
#include "hypershare/strategy.hpp"

namespace hypershare::cli {

enum ExitStatus : int {
  kOk = 0,
  kParse = 2,
  kNotConnected = 3,
  kInvalidCluster = 4,
  kTooLarge = 5,
  kVerificationFailed = 6,
  kUnknownFixture = 7,
  kInvalidStrategy = 8,
  kIo = 9,
};

constexpr int exit_status(ErrorCode code) {
  if (is_cluster_error(code)) return kInvalidCluster;
  switch (code) {
    case ErrorCode::ParseError: return kParse;
    case ErrorCode::InvalidHypergraph:
    case ErrorCode::UniformityError:
    case ErrorCode::NotConnected: return kNotConnected;
    case ErrorCode::TooLarge: return kTooLarge;
    case ErrorCode::SingularSystem:
    case ErrorCode::Inconsistent: return kVerificationFailed;
    case ErrorCode::UnknownFixture: return kUnknownFixture;
    case ErrorCode::InvalidStrategy:
    case ErrorCode::DomainMismatch: return kInvalidStrategy;
    default: return kVerificationFailed;
  }
}

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Contents of `source`: an existing file, otherwise a fixture name.
inline std::string load_source(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw IoError("cannot read " + source);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return io::to_text(io::fixture(source));
}

enum class SchemeChoice { Auto, Tree, Topological, Forehead, Cluster };

inline bool is_complete_forehead(const Hypergraph& g) {
  return g.n() >= 2 && g.k() + 1 == g.n() && g.edge_count() == g.n();
}

/// Scheme selection. Auto order: k = 2 -> tree; complete (n-1)-uniform ->
/// forehead; file with components -> cluster; otherwise topological.
inline Strategy synthesize(const io::HypergraphFile& input, SchemeChoice scheme) {
  const auto& g = input.graph;
  if (scheme == SchemeChoice::Auto) {
    if (g.k() == 2)
      scheme = SchemeChoice::Tree;
    else if (is_complete_forehead(g))
      scheme = SchemeChoice::Forehead;
    else if (input.components)
      scheme = SchemeChoice::Cluster;
    else
      scheme = SchemeChoice::Topological;
  }
  switch (scheme) {
    case SchemeChoice::Tree: return synthesize_tree(g);
    case SchemeChoice::Forehead:
      if (!is_complete_forehead(g))
        throw Error(ErrorCode::UniformityError, "forehead scheme needs the complete (n-1)-uniform hypergraph");
      return synthesize_forehead(g.n());
    case SchemeChoice::Cluster: {
      if (!input.components) throw Error(ErrorCode::InvalidCluster, "input has no 'components' section");
      return synthesize_cluster(validate_cluster(g, *input.components));
    }
    case SchemeChoice::Topological:
    case SchemeChoice::Auto: break;
  }
  return synthesize_topological(g);
}

/// Strategy from a strategy file, or synthesized (auto) from a hypergraph input.
inline Strategy load_strategy(const std::string& source) {
  const auto text = load_source(source);
  if (io::looks_like_strategy(text)) return io::parse_strategy(text);
  return synthesize(io::parse_hypergraph(text), SchemeChoice::Auto);
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string binom_str(std::int64_t n, std::int64_t k) {
  return "C(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_status(e.code());
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
}

inline int cmd_check(const std::string& source, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto input = io::parse_hypergraph(load_source(source));
    const auto& g = input.graph;
    const auto n = static_cast<std::int64_t>(g.n());
    const auto k = static_cast<std::int64_t>(g.k());
    out << "n: " << n << '\n' << "k: " << k << '\n' << "edges: " << g.edge_count() << '\n';
    out << "k_uniform: " << yes_no(k > 0) << '\n';

    bool topo = false;
    if (k >= 2) {
      const auto rank = gf2::rank(incidence_matrix(g).matrix);
      const auto target = binomial(n - 1, k - 1);
      topo = rank == target;
      out << "incidence_rank: " << rank << '\n';
      out << "topologically_connected: " << yes_no(topo) << " (needs rank " << target << " = "
          << binom_str(n - 1, k - 1) << ")\n";
      out << "minimal: " << yes_no(topo && g.edge_count() == target) << '\n';
    }
    out << "path_connected: " << yes_no(is_path_connected(g)) << '\n';
    out << "cycle_free: " << yes_no(is_cycle_free(g)) << '\n';

    if (input.components) {
      try {
        const auto spec = validate_cluster(g, *input.components);
        std::size_t size_sum = 0;
        for (const auto& a : spec.components) size_sum += a.size() - 1;
        std::size_t degree_sum = 0;
        for (Vertex v = 1; v <= g.n(); ++v) degree_sum += spec.component_degree(v) - 1;
        out << "cluster: valid (" << spec.components.size() << " components)\n";
        out << "component_size_identity: " << size_sum << " = n-1 = " << n - 1 << '\n';
        out << "component_degree_identity: " << degree_sum << " = m-1 = " << spec.components.size() - 1 << '\n';
        out << "status: ok\n";
        return int{kOk};
      } catch (const Error& e) {
        out << "cluster: " << to_string(e.code()) << '\n';
        out << "status: " << to_string(e.code()) << '\n';
        err << "error: " << e.what() << '\n';
        return exit_status(e.code());
      }
    }
    if (k < 2) {
      out << "status: ok\n";
      return int{kOk};
    }
    if (!topo) {
      out << "status: NOT_CONNECTED\n";
      return int{kNotConnected};
    }
    out << "status: ok\n";
    return int{kOk};
  });
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << text;
}

inline int cmd_synthesize(const std::string& source, SchemeChoice scheme, const std::string& output_path,
                          std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto input = io::parse_hypergraph(load_source(source));
    const auto s = synthesize(input, scheme);
    std::string text = "# scheme " + std::string(to_string(s.scheme())) + "\n" + io::to_text(s);
    text += "# coins " + std::to_string(s.coins().size()) + "\n";
    text += "# broadcasts " + std::to_string(s.broadcasts().size()) + "\n";
    text += "# rate " + s.rate().str() + "\n";
    text += "# bound " + s.bound().str() + "\n";
    write_output(output_path, text, out);
    if (!output_path.empty())
      out << "coins: " << s.coins().size() << "\nbroadcasts: " << s.broadcasts().size() << "\nrate: " << s.rate()
          << "\nbound: " << s.bound() << '\n';
    return int{kOk};
  });
}

inline std::string report_text(const SimulationReport& r) {
  std::ostringstream os;
  os << "zero_error: " << (r.zero_error ? "true" : "false") << '\n';
  os << "assignments_checked: " << r.assignments_checked << '\n';
  os << "rate: " << r.rate << '\n';
  os << "bound: " << r.bound << '\n';
  os << "algebraic_certificate: " << (r.algebraic_certificate ? "true" : "false") << '\n';
  for (const auto& u : r.per_user)
    os << "user " << u.user << ": rows " << u.rows << " rank " << u.rank << " invertible "
       << (u.invertible ? "yes" : "no") << " failures " << u.failures << '\n';
  return os.str();
}

inline nlohmann::json report_json(const SimulationReport& r) {
  nlohmann::json users = nlohmann::json::array();
  for (const auto& u : r.per_user)
    users.push_back({{"user", u.user}, {"rows", u.rows}, {"rank", u.rank}, {"invertible", u.invertible},
                     {"failures", u.failures}});
  return {{"zero_error", r.zero_error},
          {"assignments_checked", r.assignments_checked},
          {"rate_num", r.rate.num()},
          {"rate_den", r.rate.den()},
          {"bound_num", r.bound.num()},
          {"bound_den", r.bound.den()},
          {"algebraic_certificate", r.algebraic_certificate},
          {"per_user", users}};
}

inline int cmd_simulate(const std::string& source, const VerificationMode& mode, bool json, std::ostream& out,
                        std::ostream& err) {
  return guarded(err, [&] {
    const auto s = load_strategy(source);
    const auto report = verify_zero_error(s, mode);
    if (json)
      out << report_json(report).dump(2) << '\n';
    else
      out << report_text(report);
    if (!report.zero_error) {
      err << "error: strategy does not decode with zero error";
      if (!report.algebraic_certificate) err << " (SINGULAR_SYSTEM)";
      err << '\n';
      return int{kVerificationFailed};
    }
    return int{kOk};
  });
}

inline std::string bits_str(const Entropy& h) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(9) << h.value();
  return os.str();
}

inline std::string report_text(const EntropyReport& r) {
  std::ostringstream os;
  os << "h_M_bits: " << bits_str(r.h_M) << '\n';
  os << "h_X_bits: " << bits_str(r.h_X) << '\n';
  for (std::size_t i = 0; i < r.h_M_given_Ri.size(); ++i)
    os << "h_M_given_R" << i + 1 << "_bits: " << bits_str(r.h_M_given_Ri[i]) << '\n';
  os << "sum_conditional_bits: " << bits_str(r.lemma42_lhs) << '\n';
  os << "n_minus_1_times_h_M_bits: " << bits_str(r.lemma42_rhs) << '\n';
  os << "lemma42_holds: " << (r.lemma42_holds ? "true" : "false") << '\n';
  os << "theorem11_holds: " << (r.theorem11_satisfied ? "true" : "false") << '\n';
  os << "theorem11_tight: " << (r.theorem11_tight ? "true" : "false") << '\n';
  os << "rate: " << r.rate << '\n';
  os << "bound: " << r.bound << '\n';
  return os.str();
}

inline int cmd_entropy(const std::string& source, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto r = exact_entropies(load_strategy(source));
    out << report_text(r);
    return int{r.lemma42_holds && r.theorem11_satisfied ? kOk : kVerificationFailed};
  });
}

/// Writes one fixture (to `output_path` or `out`), or with `directory` set,
/// every standard fixture as <directory>/<name>.txt.
inline int cmd_fixtures(const std::string& name, const std::string& output_path, const std::string& directory,
                        std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!directory.empty()) {
      std::filesystem::create_directories(directory);
      const auto names = name == "all" ? io::standard_fixture_names() : std::vector<std::string>{name};
      for (const auto& n : names) {
        const auto path = (std::filesystem::path(directory) / (n + ".txt")).string();
        write_output(path, io::to_text(io::fixture(n)), out);
        out << path << '\n';
      }
      return int{kOk};
    }
    write_output(output_path, io::to_text(io::fixture(name)), out);
    return int{kOk};
  });
}

}  // namespace hypershare::cli
