// Command line front end: enumeration, expansion and verification of
// Verma bases for spo(4|1) with stable machine-readable output.

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spoverma/algebra.hpp"
#include "spoverma/modulespace.hpp"
#include "spoverma/tableaux.hpp"
#include "spoverma/verify.hpp"
#include "spoverma/verma.hpp"

namespace {

using namespace spoverma;

enum class Format { json, tsv, ascii };

struct ShapeArgs {
  std::string shape_str;
  int m1 = -1;
  int m2 = -1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--shape", shape_str, "Shape as l1,l2 (partition form)");
    cmd->add_option("--m1", m1, "Tensor exponent m1 = l1 - l2");
    cmd->add_option("--m2", m2, "Exterior-square exponent m2 = l2");
  }

  Shape resolve() const {
    if (!shape_str.empty()) {
      int l1 = 0, l2 = 0;
      char comma = 0;
      std::istringstream is(shape_str);
      if (!(is >> l1 >> comma >> l2) || comma != ',' || !is.eof())
        throw std::invalid_argument("--shape expects l1,l2");
      return Shape(l1, l2);
    }
    if (m1 >= 0 || m2 >= 0) {
      if (m1 < 0 || m2 < 0)
        throw std::invalid_argument("--m1 and --m2 must be given together");
      return Shape(m1 + m2, m2);
    }
    throw std::invalid_argument("a shape is required (--shape l1,l2 or --m1 N --m2 N)");
  }
};

void attach_format(CLI::App* cmd, Format& fmt) {
  cmd->add_option("--format", fmt, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{
              {"json", Format::json}, {"tsv", Format::tsv}, {"ascii", Format::ascii}},
          CLI::ignore_case));
}

BVector parse_b(const std::string& text) {
  std::istringstream is(text);
  int v[4];
  char c[3];
  if (!(is >> v[0] >> c[0] >> v[1] >> c[1] >> v[2] >> c[2] >> v[3]) || !is.eof() ||
      c[0] != ',' || c[1] != ',' || c[2] != ',')
    throw std::invalid_argument("--b expects b1,b2,b3,b4");
  if (v[0] < 0 || v[1] < 0 || v[2] < 0 || v[3] < 0)
    throw std::invalid_argument("--b components must be non-negative");
  return {v[0], v[1], v[2], v[3]};
}

std::string weight_json(Weight w) {
  return nlohmann::json{w.c1, w.c2}.dump();
}

int cmd_dim(const Shape& s, Format fmt) {
  std::uint64_t n = count_kn(s);
  if (fmt == Format::json) {
    nlohmann::ordered_json j;
    j["shape"] = {s.l1(), s.l2()};
    j["dim"] = n;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << n << "\n";
  }
  return 0;
}

int cmd_kn(const Shape& s, Format fmt) {
  bool first = true;
  for_each_kn(s, [&](const Tableau& t) {
    switch (fmt) {
      case Format::json:
        std::cout << to_json(t) << "\n";
        break;
      case Format::tsv: {
        std::string r1, r2;
        for (Letter x : t.row1()) r1 += (r1.empty() ? "" : " ") + letter_text(x);
        for (Letter x : t.row2()) r2 += (r2.empty() ? "" : " ") + letter_text(x);
        std::cout << r1 << "\t" << r2 << "\n";
        break;
      }
      case Format::ascii:
        if (!first) std::cout << "\n";
        std::cout << render_ascii(t);
        break;
    }
    first = false;
  });
  return 0;
}

int cmd_verma(const Shape& s, Format fmt) {
  for (const BVector& b : enumerate_b(s)) {
    Weight w = verma_weight(b, s);
    Tableau t = tableau_of_b(b, s);
    switch (fmt) {
      case Format::json: {
        nlohmann::ordered_json j;
        j["b"] = {b.b1, b.b2, b.b3, b.b4};
        j["weight"] = {w.c1, w.c2};
        j["tableau"] = nlohmann::ordered_json::parse(to_json(t));
        std::cout << j.dump() << "\n";
        break;
      }
      case Format::tsv:
        std::cout << b.b1 << "\t" << b.b2 << "\t" << b.b3 << "\t" << b.b4 << "\t" << w.c1
                  << "\t" << w.c2 << "\t" << to_json(t) << "\n";
        break;
      case Format::ascii:
        std::cout << "b=(" << b.b1 << "," << b.b2 << "," << b.b3 << "," << b.b4
                  << ")  weight=(" << w.c1 << "," << w.c2 << ")\n"
                  << render_ascii(t) << "\n";
        break;
    }
  }
  return 0;
}

int cmd_expand(const Shape& s, const BVector& b, Format fmt) {
  SparseVector v = verma_vector(b, s);
  switch (fmt) {
    case Format::json:
      std::cout << to_json(v) << "\n";
      break;
    case Format::tsv:
      for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it)
        std::cout << it->second.get_str() << "\t" << to_json(tableau_of_index(it->first))
                  << "\n";
      break;
    case Format::ascii:
      if (v.is_zero()) {
        std::cout << "0\n";
        break;
      }
      for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        std::cout << it->second.get_str() << " *\n"
                  << render_ascii(tableau_of_index(it->first)) << "\n";
      }
      break;
  }
  return 0;
}

int cmd_matrix(Format fmt) {
  for (Generator g : all_generators) {
    SuperMatrix m = generator_matrix(g);
    switch (fmt) {
      case Format::json: {
        nlohmann::ordered_json j;
        j["generator"] = generator_name(g);
        auto rows = nlohmann::ordered_json::array();
        for (int i = 0; i < 5; ++i) {
          auto row = nlohmann::ordered_json::array();
          for (int k = 0; k < 5; ++k) row.push_back(m.at(i, k).get_si());
          rows.push_back(row);
        }
        j["matrix"] = rows;
        std::cout << j.dump() << "\n";
        break;
      }
      case Format::tsv: {
        std::cout << generator_name(g);
        for (int i = 0; i < 5; ++i)
          for (int k = 0; k < 5; ++k) std::cout << "\t" << m.at(i, k).get_str();
        std::cout << "\n";
        break;
      }
      case Format::ascii:
        std::cout << generator_name(g) << "\n" << render_ascii(m) << "\n";
        break;
    }
  }
  return 0;
}

const std::vector<std::string> all_suites = {"algebra", "bijection", "weights", "leading",
                                             "lemma", "independence", "closure"};

std::vector<std::string> parse_suites(const std::string& csv) {
  if (csv.empty()) return all_suites;
  std::vector<std::string> out;
  std::istringstream is(csv);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (std::find(all_suites.begin(), all_suites.end(), item) == all_suites.end())
      throw std::invalid_argument("unknown suite: " + item);
    out.push_back(item);
  }
  return out;
}

SuiteReport run_suite(const std::string& name, const Shape& s, std::uint64_t budget) {
  if (name == "algebra") return suite_algebra();
  if (name == "bijection") return suite_bijection(s);
  if (name == "weights") return suite_weights(s);
  if (name == "leading") return suite_leading(s);
  if (name == "lemma") return suite_lemma(s);
  if (name == "independence") return suite_independence(s);
  if (name == "closure") return suite_closure(s, budget);
  throw std::invalid_argument("unknown suite: " + name);
}

int cmd_verify(const Shape& s, const std::vector<std::string>& suites, std::uint64_t budget) {
  bool clean = true;
  for (const std::string& name : suites) {
    SuiteReport r = run_suite(name, s, budget);
    std::cout << to_json(r) << "\n";
    clean = clean && r.passed();
  }
  return clean ? 0 : 1;
}

int cmd_sweep(int max_m1, int max_m2, const std::vector<std::string>& suites,
              std::uint64_t budget) {
  bool clean = true;
  // the algebra suite is shape independent: run it once up front
  if (std::find(suites.begin(), suites.end(), std::string("algebra")) != suites.end()) {
    SuiteReport r = suite_algebra();
    std::cout << to_json(r) << "\n";
    clean = clean && r.passed();
  }
  for (int m1 = 0; m1 <= max_m1; ++m1)
    for (int m2 = 0; m2 <= max_m2; ++m2) {
      Shape s(m1 + m2, m2);
      for (const std::string& name : suites) {
        if (name == "algebra") continue;
        SuiteReport r = run_suite(name, s, budget);
        std::cout << to_json(r) << "\n";
        clean = clean && r.passed();
      }
    }
  return clean ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verma bases of the finite dimensional irreducible spo(4|1) representations"};
  app.require_subcommand(1);

  Format fmt = Format::tsv;
  ShapeArgs shape_args;
  std::string b_str;
  std::string suites_csv;
  std::uint64_t budget = default_closure_budget;
  int max_m1 = 3;
  int max_m2 = 3;

  CLI::App* dim = app.add_subcommand("dim", "Dimension of L(lambda), i.e. |KN(lambda)|");
  CLI::App* kn = app.add_subcommand("kn", "List the KN tableaux of a shape, sorted");
  CLI::App* verma =
      app.add_subcommand("verma", "List the Verma basis: exponents, weight, tableau");
  CLI::App* expand =
      app.add_subcommand("expand", "Expand f1^b4 f2^b3 f1^b2 f2^b1 v_lambda in W");
  CLI::App* verify = app.add_subcommand("verify", "Run verification suites on one shape");
  CLI::App* matrix = app.add_subcommand("matrix", "Print the six generator matrices");
  CLI::App* sweep = app.add_subcommand("sweep", "Run verification suites over a shape range");

  for (CLI::App* cmd : {dim, kn, verma, expand, verify})
    shape_args.attach(cmd);
  for (CLI::App* cmd : {dim, kn, verma, expand, matrix})
    attach_format(cmd, fmt);
  expand->add_option("--b", b_str, "Exponents as b1,b2,b3,b4");
  for (CLI::App* cmd : {verify, sweep}) {
    cmd->add_option("--suites", suites_csv,
                    "Comma separated subset of: algebra,bijection,weights,leading,"
                    "lemma,independence,closure (default: all)");
    cmd->add_option("--budget", budget, "Closure dimension cap (default 200000)");
  }
  sweep->add_option("--max-m1", max_m1, "Sweep bound for m1 (default 3)");
  sweep->add_option("--max-m2", max_m2, "Sweep bound for m2 (default 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (dim->parsed()) return cmd_dim(shape_args.resolve(), fmt);
    if (kn->parsed()) return cmd_kn(shape_args.resolve(), fmt);
    if (verma->parsed()) return cmd_verma(shape_args.resolve(), fmt);
    if (expand->parsed()) {
      if (b_str.empty()) throw std::invalid_argument("expand requires --b b1,b2,b3,b4");
      return cmd_expand(shape_args.resolve(), parse_b(b_str), fmt);
    }
    if (verify->parsed())
      return cmd_verify(shape_args.resolve(), parse_suites(suites_csv), budget);
    if (matrix->parsed()) return cmd_matrix(fmt);
    if (sweep->parsed()) {
      if (max_m1 < 0 || max_m2 < 0)
        throw std::invalid_argument("sweep bounds must be non-negative");
      return cmd_sweep(max_m1, max_m2, parse_suites(suites_csv), budget);
    }
  } catch (const spoverma::internal_error& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
