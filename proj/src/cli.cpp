// Copyright 2026 The tropjac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tropjac/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropjac/chipfire.hpp"
#include "tropjac/error.hpp"
#include "tropjac/homology.hpp"
#include "tropjac/inversion.hpp"
#include "tropjac/io.hpp"
#include "tropjac/theta.hpp"

namespace tropjac {

namespace {

using nlohmann::json;

struct Printer {
  bool decimal = false;

  std::string num(const Rational& r) const { return decimal ? to_decimal_string(r) : to_string(r); }

  std::string vec(const Vector& v) const {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + num(v[i]);
    return s + ")";
  }

  std::string matrix(const Matrix& m) const {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + num(m(i, j));
      s += "]";
    }
    return s + "]";
  }

  // A 1 x 1 period lattice is shown as its generator, "[2]".
  std::string lattice(const Matrix& m) const {
    if (m.rows() == 1) return "[" + num(m(0, 0)) + "]";
    return matrix(m);
  }

  std::string point(const GraphPoint& p, const MetricGraph& g) const {
    if (p.is_vertex()) return g.vertex_id(p.vertex_index());
    return g.edge(p.edge_index()).id + "@" + num(p.offset());
  }

  std::string divisor(const Divisor& d, const MetricGraph& g) const {
    if (d.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [p, c] : d.terms()) {
      const std::int64_t a = c < 0 ? -c : c;
      if (first) s += c < 0 ? "-" : "";
      else s += c < 0 ? " - " : " + ";
      if (a != 1) s += std::to_string(a) + "*";
      s += point(p, g);
      first = false;
    }
    return s;
  }
};

json vec_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json matrix_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    a.push_back(row);
  }
  return a;
}

json divisor_json(const Divisor& d, const MetricGraph& g) { return json::parse(serialize_divisor(d, g)); }

// Graph vertex positions on a circle and quadratic edge curves, for SVG.
struct Layout {
  struct Pt {
    double x, y;
  };
  std::vector<Pt> vertex;
  std::vector<std::array<Pt, 4>> curve;  // cubic Bezier per graph edge

  explicit Layout(const MetricGraph& g) {
    const double cx = 240, cy = 240, r = g.num_vertices() == 1 ? 0 : 150;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      const double a = 2 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(g.num_vertices()) - std::numbers::pi / 2;
      vertex.push_back({cx + r * std::cos(a), cy + r * std::sin(a)});
    }
    std::map<std::pair<int, int>, int> seen;
    std::map<std::pair<int, int>, int> total;
    for (const auto& e : g.edges()) ++total[{std::min(e.tail, e.head), std::max(e.tail, e.head)}];
    for (const auto& e : g.edges()) {
      const auto key = std::make_pair(std::min(e.tail, e.head), std::max(e.tail, e.head));
      const int k = seen[key]++;
      const Pt a = vertex[static_cast<std::size_t>(e.tail)], b = vertex[static_cast<std::size_t>(e.head)];
      if (e.is_loop()) {
        const double ang = std::atan2(a.y - cy, a.x - cx) + 0.6 * k;
        const double s = 70 + 25 * k, w = 0.5;
        const Pt c1{a.x + s * std::cos(ang - w), a.y + s * std::sin(ang - w)};
        const Pt c2{a.x + s * std::cos(ang + w), a.y + s * std::sin(ang + w)};
        curve.push_back({a, c1, c2, a});
        continue;
      }
      const double bend = (k - (total[key] - 1) / 2.0) * 70;
      const double dx = b.x - a.x, dy = b.y - a.y, len = std::hypot(dx, dy);
      const double nx = -dy / len * bend, ny = dx / len * bend;
      curve.push_back({a, Pt{a.x + dx / 3 + nx, a.y + dy / 3 + ny}, Pt{a.x + 2 * dx / 3 + nx, a.y + 2 * dy / 3 + ny}, b});
    }
  }

  Pt at(int edge, double t) const {
    const auto& c = curve[static_cast<std::size_t>(edge)];
    const double u = 1 - t;
    return {u * u * u * c[0].x + 3 * u * u * t * c[1].x + 3 * u * t * t * c[2].x + t * t * t * c[3].x,
            u * u * u * c[0].y + 3 * u * u * t * c[1].y + 3 * u * t * t * c[2].y + t * t * t * c[3].y};
  }
};

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string render_dot(const MetricGraph& graph, const Divisor& d) {
  const Printer pr;
  const auto support = d.support();
  const Model m(graph, support);
  std::ostringstream s;
  s << "graph tropjac {\n  node [fontname=\"Helvetica\"];\n  edge [fontname=\"Helvetica\"];\n";
  for (int v = 0; v < static_cast<int>(m.num_vertices()); ++v) {
    const GraphPoint& p = m.point(v);
    const std::int64_t c = d.coefficient(p);
    s << "  n" << v << " [";
    if (p.is_vertex()) {
      s << "shape=circle, label=\"" << dot_escape(graph.vertex_id(p.vertex_index())) << "\"";
    } else {
      s << "shape=point, width=0.08, label=\"\"";
    }
    if (c != 0) s << ", xlabel=\"" << (c > 0 ? "+" : "") << c << "\", color=" << (c > 0 ? "red" : "blue");
    s << "];\n";
  }
  for (const auto& me : m.edges()) {
    s << "  n" << me.tail << " -- n" << me.head << " [label=\"" << dot_escape(graph.edge(me.parent).id) << " "
      << pr.num(me.length()) << "\"];\n";
  }
  s << "}\n";
  return s.str();
}

std::string render_svg(const MetricGraph& graph, const Divisor& d) {
  const Layout lay(graph);
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(1);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
  s << "<rect width=\"480\" height=\"480\" fill=\"white\"/>\n";
  for (std::size_t e = 0; e < graph.num_edges(); ++e) {
    const auto& c = lay.curve[e];
    s << "<path d=\"M " << c[0].x << ' ' << c[0].y << " C " << c[1].x << ' ' << c[1].y << ", " << c[2].x << ' ' << c[2].y
      << ", " << c[3].x << ' ' << c[3].y << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    const auto mid = lay.at(static_cast<int>(e), 0.5);
    s << "<text x=\"" << mid.x + 6 << "\" y=\"" << mid.y - 6 << "\" font-size=\"12\" fill=\"gray\">"
      << xml_escape(graph.edge(static_cast<int>(e)).id + " " + to_string(graph.edge(static_cast<int>(e)).length)) << "</text>\n";
  }
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    const auto& p = lay.vertex[v];
    s << "<circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"6\" fill=\"black\"/>\n";
    s << "<text x=\"" << p.x + 9 << "\" y=\"" << p.y + 16 << "\" font-size=\"13\">" << xml_escape(graph.vertex_id(static_cast<int>(v)))
      << "</text>\n";
  }
  for (const auto& [pt, c] : d.terms()) {
    Layout::Pt q;
    if (pt.is_vertex()) {
      q = lay.vertex[static_cast<std::size_t>(pt.vertex_index())];
    } else {
      const Rational frac = pt.offset() / graph.edge(pt.edge_index()).length;
      q = lay.at(pt.edge_index(), frac.convert_to<double>());
    }
    const char* colour = c > 0 ? "crimson" : "royalblue";
    s << "<circle cx=\"" << q.x << "\" cy=\"" << q.y << "\" r=\"5\" fill=\"" << colour << "\"/>\n";
    s << "<text x=\"" << q.x - 8 << "\" y=\"" << q.y - 9 << "\" font-size=\"13\" fill=\"" << colour << "\">" << (c > 0 ? "+" : "") << c
      << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisors, Jacobians and theta functions of tropical curves", "tropjac"};
  app.require_subcommand(1);
  bool as_json = false;
  bool decimal = false;
  app.add_flag("--json", as_json, "Emit JSON");
  app.add_flag("--decimal", decimal, "Show rationals as decimals (display only)");

  std::string graph_file, divisor_file, base_text, lambda_text, at_text, svg_file;
  auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph", graph_file, "Graph JSON file")->required(); };
  auto divisor_arg = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("divisor", divisor_file, "Divisor JSON file");
    if (required) o->required();
  };
  auto base_opt = [&](CLI::App* sub) { sub->add_option("--base", base_text, "Base point, \"v1\" or \"A@1/2\""); };

  auto* c_genus = app.add_subcommand("genus", "First Betti number");
  graph_arg(c_genus);
  auto* c_canonical = app.add_subcommand("canonical", "Canonical divisor");
  graph_arg(c_canonical);
  auto* c_period = app.add_subcommand("period", "Period matrix of the default cycle basis");
  graph_arg(c_period);
  auto* c_aj = app.add_subcommand("aj", "Abel-Jacobi image (canonical representative)");
  graph_arg(c_aj);
  divisor_arg(c_aj, true);
  base_opt(c_aj);
  auto* c_theta = app.add_subcommand("theta", "Theta function value and maximizers");
  graph_arg(c_theta);
  c_theta->add_option("--at", at_text, "Argument u, e.g. \"1,1\"")->required();
  auto* c_reduce = app.add_subcommand("reduce", "p-reduced representative");
  graph_arg(c_reduce);
  divisor_arg(c_reduce, true);
  base_opt(c_reduce);
  auto* c_rank = app.add_subcommand("rank", "Baker-Norine rank");
  graph_arg(c_rank);
  divisor_arg(c_rank, true);
  base_opt(c_rank);
  auto* c_rr = app.add_subcommand("rr-check", "Check Riemann-Roch for D");
  graph_arg(c_rr);
  divisor_arg(c_rr, true);
  base_opt(c_rr);
  auto* c_kappa = app.add_subcommand("kappa", "Jacobi inversion constant");
  graph_arg(c_kappa);
  base_opt(c_kappa);
  auto* c_inv = app.add_subcommand("inversion", "Theta pullback D_lambda, or the canonical effective form of D");
  graph_arg(c_inv);
  divisor_arg(c_inv, false);
  c_inv->add_option("--lambda", lambda_text, "Translation lambda, e.g. \"1/2,1\"");
  base_opt(c_inv);
  auto* c_riemann = app.add_subcommand("riemann-check", "Compare the theta test with chip-firing on a degree g-1 divisor");
  graph_arg(c_riemann);
  divisor_arg(c_riemann, true);
  base_opt(c_riemann);
  auto* c_mod = app.add_subcommand("moderators", "Moderators of all acyclic orientations");
  graph_arg(c_mod);
  divisor_arg(c_mod, false);
  auto* c_break = app.add_subcommand("break", "Break divisor test");
  graph_arg(c_break);
  divisor_arg(c_break, true);
  auto* c_dot = app.add_subcommand("dot", "Graphviz rendering with divisor marks");
  graph_arg(c_dot);
  divisor_arg(c_dot, false);
  c_dot->add_option("--svg", svg_file, "Also write a static SVG drawing");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Printer pr{decimal};
  try {
    const MetricGraph graph = parse_graph(read_file(graph_file));
    const std::size_t g = static_cast<std::size_t>(genus(graph));
    auto divisor = [&]() { return divisor_file.empty() ? Divisor() : parse_divisor(read_file(divisor_file), graph); };
    auto base = [&]() { return base_text.empty() ? GraphPoint::vertex(0) : parse_point(base_text, graph); };
    auto dimension = [&](const Vector& v, const char* what) {
      if (v.size() != g)
        throw Error("cli", "BadVector", std::string(what) + " needs " + std::to_string(g) + " components");
      return v;
    };
    json result;

    if (c_genus->parsed()) {
      result = {{"genus", g}};
      if (!as_json) out << g << "\n";
    } else if (c_canonical->parsed()) {
      const Divisor k = canonical_divisor(graph);
      result = {{"canonical", divisor_json(k, graph)}};
      if (!as_json) out << pr.divisor(k, graph) << "\n";
    } else if (c_period->parsed()) {
      const Jacobian jac(graph);
      result = {{"period", matrix_json(jac.period().matrix())}};
      if (!as_json) out << pr.matrix(jac.period().matrix()) << "\n";
    } else if (c_aj->parsed()) {
      const Jacobian jac(graph);
      const Vector u = jac.canonical(jac.abel_jacobi(divisor(), base()));
      result = {{"abel_jacobi", vec_json(u)}, {"period", matrix_json(jac.period().matrix())}};
      if (!as_json) out << pr.vec(u) << " mod " << pr.lattice(jac.period().matrix()) << "\n";
    } else if (c_theta->parsed()) {
      const Jacobian jac(graph);
      const ThetaValue th = theta(jac.period(), dimension(parse_vector(at_text), "--at"));
      json ms = json::array();
      std::string text;
      for (const auto& n : th.maximizers) {
        ms.push_back(n);
        text += " " + format_vector(n);
      }
      result = {{"value", to_string(th.value)}, {"maximizers", ms}, {"on_theta_divisor", th.maximizers.size() >= 2}};
      if (!as_json) out << "Theta = " << pr.num(th.value) << "; maximizers:" << text << "\n";
    } else if (c_reduce->parsed()) {
      const Jacobian jac(graph);
      const ChipFiring cf(jac);
      const ReduceResult r = cf.reduce_with_stats(divisor(), base());
      result = {{"reduced", divisor_json(r.divisor, graph)}, {"events", r.events}};
      if (!as_json) out << pr.divisor(r.divisor, graph) << "\n";
    } else if (c_rank->parsed()) {
      const Jacobian jac(graph);
      const ChipFiring cf(jac);
      const std::int64_t r = cf.rank(divisor(), base());
      result = {{"rank", r}};
      if (!as_json) out << r << "\n";
    } else if (c_rr->parsed()) {
      const Jacobian jac(graph);
      const ChipFiring cf(jac);
      const Divisor d = divisor();
      const std::int64_t r = cf.rank(d, base());
      const std::int64_t rk = cf.rank(canonical_divisor(graph) - d, base());
      const bool ok = r - rk == d.degree() - static_cast<std::int64_t>(g) + 1;
      result = {{"ok", ok}, {"degree", d.degree()}, {"rank", r}, {"dual_rank", rk}, {"genus", g}};
      if (!as_json)
        out << (ok ? "OK" : "FAIL") << " d=" << d.degree() << ", r(D)=" << r << ", r(K-D)=" << rk << "\n";
      if (!ok) {
        if (as_json) out << result.dump(2) << "\n";
        return 1;
      }
    } else if (c_kappa->parsed()) {
      const Jacobian jac(graph);
      const Vector k = kappa(jac, base());
      result = {{"kappa", vec_json(k)}, {"period", matrix_json(jac.period().matrix())}};
      if (!as_json) out << "κ = " << pr.vec(k) << " mod " << pr.lattice(jac.period().matrix()) << "\n";
    } else if (c_inv->parsed()) {
      const Jacobian jac(graph);
      Divisor d;
      if (!divisor_file.empty() && !lambda_text.empty())
        throw CLI::ValidationError("inversion takes either a divisor or --lambda, not both");
      if (!divisor_file.empty()) d = canonical_effective(jac, divisor(), base());
      else d = pullback_theta(jac, base(), dimension(parse_vector(lambda_text), "--lambda"));
      result = {{"divisor", divisor_json(d, graph)}, {"break_divisor", is_break_divisor(graph, d)}};
      if (!as_json) out << pr.divisor(d, graph) << "\n";
    } else if (c_riemann->parsed()) {
      const Jacobian jac(graph);
      const ChipFiring cf(jac);
      const Divisor d = divisor();
      if (d.degree() != static_cast<std::int64_t>(g) - 1)
        throw Error("cli", "DegreeMismatch", "riemann-check needs a divisor of degree g-1 = " + std::to_string(static_cast<std::int64_t>(g) - 1));
      const bool by_theta = riemann_membership(jac, jac.abel_jacobi(d, base()), base());
      const bool by_chips = cf.linear_system_nonempty(d, base());
      result = {{"theta", by_theta}, {"chipfire", by_chips}, {"agree", by_theta == by_chips}};
      if (!as_json)
        out << (by_theta == by_chips ? "OK" : "DISAGREE") << " theta=" << (by_theta ? "effective" : "empty")
            << ", chipfire=" << (by_chips ? "effective" : "empty") << "\n";
      if (by_theta != by_chips) {
        if (as_json) out << result.dump(2) << "\n";
        return 1;
      }
    } else if (c_mod->parsed()) {
      const auto support = divisor().support();
      const Model m(graph, support);
      json list = json::array();
      for (const auto& o : enumerate_acyclic_orientations(m)) {
        const Divisor k = moderator(o);
        list.push_back(divisor_json(k, graph));
        if (!as_json) out << pr.divisor(k, graph) << "\n";
      }
      result = {{"moderators", list}};
    } else if (c_break->parsed()) {
      const bool b = is_break_divisor(graph, divisor());
      result = {{"break_divisor", b}};
      if (!as_json) out << (b ? "break divisor" : "not a break divisor") << "\n";
    } else if (c_dot->parsed()) {
      const Divisor d = divisor();
      const std::string dot = render_dot(graph, d);
      if (!svg_file.empty()) {
        std::ofstream f(svg_file);
        if (!f) throw Error("cli", "FileNotWritable", "cannot write '" + svg_file + "'");
        f << render_svg(graph, d);
      }
      result = {{"dot", dot}};
      if (!as_json) out << dot;
    }
    if (as_json) out << result.dump(2) << "\n";
    return 0;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tropjac
