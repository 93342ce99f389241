#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tourney/enumeration.hpp"
#include "tourney/exclusion.hpp"
#include "tourney/growth.hpp"
#include "tourney/homog.hpp"
#include "tourney/matching.hpp"
#include "tourney/tournament.hpp"
#include "tourney/triangles.hpp"
#include "tourney/verify.hpp"

namespace {

using tourney::Tournament;
using tourney::VertexOrdering;
using tourney::VertexSet;

/// Reads tournament lines from a file, or from standard input when path is
/// "-". Blank and comment-only lines are skipped.
std::vector<Tournament> read_tournaments(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open " + path);
    in = &file;
  }
  std::vector<Tournament> ts;
  std::string line;
  while (std::getline(*in, line)) {
    std::string body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    ts.push_back(Tournament::parse(line));
  }
  if (ts.empty())
    throw std::invalid_argument("no tournament lines in " +
                                (path == "-" ? std::string("standard input") : path));
  return ts;
}

std::string set_text(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : tourney::set_elements(s)) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(v + 1);
  }
  return out + "}";
}

std::string ordering_text(const VertexOrdering& o) {
  std::string s;
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(o[i] + 1);
  }
  return s;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

int cmd_gen(int n, bool canonical) {
  if (n < 1) throw std::invalid_argument("--n must be at least 1");
  if (canonical) {
    for (const Tournament& t : tourney::enumerate_canonical(n)) std::cout << t.to_line() << "\n";
  } else {
    if (n > 6)
      throw std::invalid_argument("labeled generation supports n <= 6; use --canonical beyond");
    for (const Tournament& t : tourney::labeled_tournaments(n)) std::cout << t.to_line() << "\n";
  }
  return 0;
}

int cmd_prime(const std::string& path) {
  for (const Tournament& t : read_tournaments(path)) {
    auto m = tourney::find_nontrivial_module(t);
    if (!m)
      std::cout << t.to_line() << ": prime\n";
    else
      std::cout << t.to_line() << ": module " << set_text(*m) << "\n";
  }
  return 0;
}

int cmd_decompose(const std::string& path) {
  for (const Tournament& t : read_tournaments(path))
    std::cout << tourney::tree_to_string(tourney::decompose(t)) << "\n";
  return 0;
}

int cmd_grow(const std::string& path, const std::vector<int>& ids, bool by_one) {
  for (const Tournament& t : read_tournaments(path)) {
    VertexSet h = 0;
    for (int id : ids) {
      if (id < 1 || id > t.size())
        throw std::invalid_argument("--h id " + std::to_string(id) + " out of range");
      h |= tourney::bit(id - 1);
    }
    if (by_one) {
      VertexSet s = tourney::grow_by_one(t, h);
      std::cout << t.to_line() << ": prime set " << set_text(s) << "\n";
    } else {
      auto [a, b] = tourney::grow_by_two(t, h);
      std::cout << t.to_line() << ": added " << a + 1 << "," << b + 1 << " prime set "
                << set_text(h | tourney::bit(a) | tourney::bit(b)) << "\n";
    }
  }
  return 0;
}

int cmd_triangles(const std::string& path) {
  for (const Tournament& t : read_tournaments(path)) {
    auto tris = tourney::cyclic_triangles(t);
    auto comps = tourney::triangle_components(t);
    std::vector<int> sizes;
    for (const auto& c : comps) sizes.push_back(static_cast<int>(c.size()));
    std::cout << t.to_line() << ": triangles=" << tris.size() << " components=" << comps.size();
    if (!sizes.empty()) std::cout << " sizes=" << join_ints(sizes);
    std::cout << " triangle_connected=" << (tourney::is_triangle_connected(t) ? "yes" : "no")
              << "\n";
  }
  return 0;
}

int cmd_matching(const std::string& path, bool find, bool count, bool enumerate, bool minimal) {
  for (const Tournament& t : read_tournaments(path)) {
    if (find) {
      auto o = tourney::find_matching_ordering(t);
      std::cout << t.to_line() << ": " << (o ? ordering_text(*o) : std::string("none")) << "\n";
    } else if (count) {
      std::cout << t.to_line() << ": " << tourney::count_matching_orderings(t) << "\n";
    } else if (enumerate) {
      auto all = tourney::enumerate_matching_orderings(t);
      std::cout << t.to_line() << ": count=" << all.size() << "\n";
      for (const VertexOrdering& o : all) std::cout << "  " << ordering_text(o) << "\n";
    } else if (minimal) {
      std::cout << t.to_line() << ": minimal_non_matching="
                << (tourney::is_minimal_non_matching(t) ? "yes" : "no") << "\n";
    }
  }
  return 0;
}

tourney::Pattern parse_pattern(const std::string& name) {
  if (name == "J") return tourney::Pattern::J;
  if (name == "K") return tourney::Pattern::K;
  return tourney::Pattern::Kstar;
}

int cmd_exclude(const std::string& path, const std::string& pattern_name, int size, bool check,
                bool order, bool structure) {
  tourney::Pattern p = parse_pattern(pattern_name);
  for (const Tournament& t : read_tournaments(path)) {
    if (check) {
      auto w = tourney::has_pattern(t, p, size);
      if (w)
        std::cout << t.to_line() << ": " << pattern_name << "_" << size << " at " << set_text(*w)
                  << "\n";
      else
        std::cout << t.to_line() << ": no " << pattern_name << "_" << size << "\n";
    } else if (order) {
      if (p != tourney::Pattern::J)
        throw std::invalid_argument("--order applies to --pattern J only");
      tourney::BoundedOrdering bo = tourney::bounded_backedge_ordering(t, size);
      std::cout << t.to_line() << ": order " << ordering_text(bo.order)
                << " max_backedge=" << bo.max_backedge
                << " bound=" << tourney::backedge_length_bound(size) << "\n";
    } else if (structure) {
      if (p == tourney::Pattern::J)
        throw std::invalid_argument("--structure applies to --pattern K or Kstar");
      tourney::StructureDecomposition sd = tourney::kn_free_decompose(t);
      std::vector<int> sizes;
      for (VertexSet part : sd.parts) sizes.push_back(tourney::popcount(part));
      std::cout << t.to_line() << ": T_" << sd.r << "[" << join_ints(sizes) << "]";
      for (VertexSet part : sd.parts) std::cout << " " << set_text(part);
      std::cout << " max_j=" << join_ints(sd.part_max_j) << " j_free=" << sd.j_freeness() << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& theorem, int max_n, int jobs) {
  tourney::VerificationReport rep = tourney::run_suite(theorem, max_n, jobs);
  std::cout << rep.to_text();
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation on small tournaments"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "print tournaments of a given size");
  int gen_n = 0;
  bool gen_canonical = false;
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_flag("--canonical", gen_canonical,
                "one representative per isomorphism class (n <= 8); default is all labeled "
                "tournaments (n <= 6)");

  auto* prime = app.add_subcommand("prime", "primality verdict and witness module per line");
  std::string prime_in;
  prime->add_option("--in", prime_in, "input file of tournament lines, - for stdin")->required();

  auto* decomp = app.add_subcommand("decompose", "print modular decomposition trees");
  std::string decomp_in;
  decomp->add_option("--in", decomp_in, "input file of tournament lines, - for stdin")->required();

  auto* grow = app.add_subcommand("grow", "grow a prime subtournament by one or two vertices");
  grow->set_help_flag("--help", "print help");  // frees -h for the vertex-set option below
  std::string grow_in;
  std::vector<int> grow_h;
  bool by_one = false, by_two = false;
  grow->add_option("--in", grow_in, "input file of tournament lines, - for stdin")->required();
  grow->add_option("--h", grow_h, "1-based vertex ids of the prime subtournament")
      ->required()
      ->delimiter(',');
  auto* f1 = grow->add_flag("--by-one", by_one, "grow by one vertex (needs |h| >= 5)");
  auto* f2 = grow->add_flag("--by-two", by_two, "grow by two vertices (default)");
  f1->excludes(f2);
  f2->excludes(f1);

  auto* tri = app.add_subcommand("triangles", "cyclic triangle components per line");
  std::string tri_in;
  tri->add_option("--in", tri_in, "input file of tournament lines, - for stdin")->required();

  auto* match = app.add_subcommand("matching", "matching-ordering queries per line");
  std::string match_in;
  bool m_find = false, m_count = false, m_enum = false, m_minimal = false;
  match->add_option("--in", match_in, "input file of tournament lines, - for stdin")->required();
  match->add_flag("--find", m_find, "print one matching ordering or none");
  match->add_flag("--count", m_count, "print the number of matching orderings");
  match->add_flag("--enumerate", m_enum, "print every matching ordering");
  match->add_flag("--minimal", m_minimal, "report whether the input is minimally non-matching");

  auto* excl = app.add_subcommand("exclude", "single-backedge pattern queries per line");
  std::string excl_in, excl_pattern;
  int excl_size = 4;
  bool e_check = false, e_order = false, e_structure = false;
  excl->add_option("--in", excl_in, "input file of tournament lines, - for stdin")->required();
  excl->add_option("--pattern", excl_pattern, "pattern family: J, K or Kstar")
      ->required()
      ->check(CLI::IsMember({"J", "K", "Kstar"}));
  excl->add_option("--size", excl_size, "pattern size (default 4)")->check(CLI::Range(3, 16));
  excl->add_flag("--check", e_check, "report the first induced pattern of the given size");
  excl->add_flag("--order", e_order, "bounded-backedge ordering for pattern-free inputs (J only)");
  excl->add_flag("--structure", e_structure,
                 "odd circle arrangement of J-bounded parts (K or Kstar)");

  auto* ver = app.add_subcommand("verify", "run a registered verification suite");
  std::string ver_theorem;
  int ver_max_n = 0, ver_jobs = 1;
  ver->add_option("--theorem", ver_theorem, "suite id")->required();
  ver->add_option("--max-n", ver_max_n, "largest vertex count to sweep")
      ->required()
      ->check(CLI::PositiveNumber);
  ver->add_option("--jobs", ver_jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) return cmd_gen(gen_n, gen_canonical);
    if (*prime) return cmd_prime(prime_in);
    if (*decomp) return cmd_decompose(decomp_in);
    if (*grow) return cmd_grow(grow_in, grow_h, by_one);
    if (*tri) return cmd_triangles(tri_in);
    if (*match) {
      int modes = (m_find ? 1 : 0) + (m_count ? 1 : 0) + (m_enum ? 1 : 0) + (m_minimal ? 1 : 0);
      if (modes != 1) {
        std::cerr << "error: pick exactly one of --find, --count, --enumerate, --minimal\n";
        return 2;
      }
      return cmd_matching(match_in, m_find, m_count, m_enum, m_minimal);
    }
    if (*excl) {
      int modes = (e_check ? 1 : 0) + (e_order ? 1 : 0) + (e_structure ? 1 : 0);
      if (modes != 1) {
        std::cerr << "error: pick exactly one of --check, --order, --structure\n";
        return 2;
      }
      return cmd_exclude(excl_in, excl_pattern, excl_size, e_check, e_order, e_structure);
    }
    if (*ver) return cmd_verify(ver_theorem, ver_max_n, ver_jobs);
  } catch (const tourney::InternalError& e) {
    std::cerr << "contradiction: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
