#include "dhlrw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "dhlrw/decomposition.hpp"
#include "dhlrw/errors.hpp"
#include "dhlrw/generators.hpp"
#include "dhlrw/io.hpp"
#include "dhlrw/lrw.hpp"
#include "dhlrw/matroid.hpp"

namespace dhlrw {

namespace {

void print_labels(std::ostream& out, const std::vector<Label>& ls) {
  for (std::size_t i = 0; i < ls.size(); ++i) out << (i ? " " : "") << ls[i];
  out << '\n';
}

int cmd_decompose(const Graph& g, std::ostream& out) {
  auto comps = components(g);
  if (comps.size() <= 1) {
    write_decomposition(out, build_canonical(g));
    return kOk;
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    out << "component " << i << '\n';
    write_decomposition(out, build_canonical(induce(g, comps[i])));
  }
  return kOk;
}

int cmd_verify(const Graph& g, const std::string& text, std::ostream& out) {
  std::istringstream in(text);
  std::vector<Label> tok;
  std::string t;
  while (in >> t) {
    try {
      std::size_t used = 0;
      tok.push_back(std::stoll(t, &used));
      if (used != t.size()) throw ParseError(0, "layout token '" + t + "' is not an integer");
    } catch (const std::logic_error&) {
      throw ParseError(0, "layout token '" + t + "' is not an integer");
    }
  }
  const std::size_t n = g.size();
  bool claimed = tok.size() == n + 1;
  if (!claimed && tok.size() != n) throw ParseError(0, "layout must list every vertex once");
  std::vector<Label> seq(tok.begin() + (claimed ? 1 : 0), tok.end());
  LinearLayout order;
  try {
    order = labels_to_layout(g, seq);
  } catch (const InvalidArgument& e) {
    throw ParseError(0, e.what());
  }
  if (n == 0) throw ParseError(0, "cannot verify a layout of the empty graph");
  int w = layout_width(g, order);
  if (claimed && w != tok[0]) {
    out << "mismatch claimed=" << tok[0] << " width=" << w << '\n';
    return kVerifyFailed;
  }
  out << "ok k=" << w << '\n';
  return kOk;
}

GenSpec parse_mix(GenSpec s, const std::string& mix) {
  std::vector<double> p;
  std::stringstream ss(mix);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      p.push_back(std::stod(part, &used));
      if (used != part.size()) throw InvalidArgument("bad --mix value");
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad --mix value '" + part + "'");
    }
  }
  if (p.size() != 3) throw InvalidArgument("--mix needs three comma separated probabilities");
  s.pendant = p[0];
  s.true_twin = p[1];
  s.false_twin = p[2];
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear rank-width of distance-hereditary graphs", "dhlrw"};
  app.require_subcommand(1);
  std::string file, layout_file, mix;
  int n = 0;
  std::uint64_t seed = 0;

  auto* lrw = app.add_subcommand("lrw", "print the linear rank-width");
  lrw->add_option("file", file, "graph file")->required();
  auto* layout = app.add_subcommand("layout", "print the width and an optimal layout");
  layout->add_option("file", file, "graph file")->required();
  auto* decompose = app.add_subcommand("decompose", "print the canonical split decomposition");
  decompose->add_option("file", file, "graph file")->required();
  auto* mpw = app.add_subcommand("matroid-pw", "path-width of a binary matroid of branch-width at most 2");
  mpw->add_option("file", file, "matrix file")->required();
  auto* verify = app.add_subcommand("verify", "recompute the width of a layout");
  verify->add_option("file", file, "graph file")->required();
  verify->add_option("--layout", layout_file, "layout file")->required();
  auto* gen = app.add_subcommand("gen", "write a random distance-hereditary graph");
  gen->add_option("--n", n, "vertex count")->required();
  gen->add_option("--seed", seed, "random seed")->required();
  gen->add_option("--mix", mix, "pendant,true-twin,false-twin probabilities");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseFailure;
  }

  try {
    if (gen->parsed()) {
      GenSpec s;
      s.n = n;
      s.seed = seed;
      if (!mix.empty()) s = parse_mix(s, mix);
      write_graph(out, gen_random_dh(s));
      return kOk;
    }
    if (mpw->parsed()) {
      BinaryMatroid m = parse_matrix(read_file(file));
      MatroidLayout r = pathwidth_bw2(oracle_of(m));
      out << r.width << '\n';
      for (std::size_t i = 0; i < r.order.size(); ++i) out << (i ? " " : "") << m.names()[r.order[i]];
      out << '\n';
      return kOk;
    }
    Graph g = parse_graph(read_file(file));
    if (lrw->parsed()) {
      out << compute_lrw(g) << '\n';
      return kOk;
    }
    if (layout->parsed()) {
      LayoutResult r = extract_layout(g);
      out << r.k << '\n';
      print_labels(out, layout_to_labels(g, r.order));
      return kOk;
    }
    if (decompose->parsed()) return cmd_decompose(g, out);
    return cmd_verify(g, read_file(layout_file), out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kParseFailure;
  } catch (const NotDistanceHereditary& e) {
    err << "not distance-hereditary: " << e.what() << '\n';
    return kNotDH;
  } catch (const BranchWidthTooLarge& e) {
    err << "branch-width exceeds 2: " << e.what() << '\n';
    return kNotDH;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace dhlrw
