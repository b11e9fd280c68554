#include "braidlens/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <functional>
#include <ostream>
#include <sstream>

#include "braidlens/braid_word.hpp"
#include "braidlens/classifier.hpp"
#include "braidlens/conjugacy.hpp"
#include "braidlens/sl2.hpp"
#include "braidlens/two_bridge.hpp"

namespace braidlens {

namespace {

std::int64_t parse_int(const std::string& text, const char* what) {
  std::string_view view(text);
  if (!view.empty() && view.front() == '+') view.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(view.data(), view.data() + view.size(), value);
  if (view.empty() || ec != std::errc() || ptr != view.data() + view.size()) {
    throw ParseError(std::string("malformed ") + what + " '" + text + "'");
  }
  return value;
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item, what));
  if (out.empty() || text.back() == ',') throw ParseError(std::string("malformed ") + what + " '" + text + "'");
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ParseError("malformed range '" + text + "' (expected lo..hi)");
  return {parse_int(text.substr(0, dots), "range bound"), parse_int(text.substr(dots + 2), "range bound")};
}

const char* boolean(bool b) { return b ? "true" : "false"; }

enum class Format { Text, Json, Tsv };

struct FormatFlags {
  bool json = false;
  bool tsv = false;

  void attach(CLI::App* sub, bool with_tsv) {
    auto* j = sub->add_flag("--json", json, "JSON output");
    if (with_tsv) sub->add_flag("--tsv", tsv, "TSV output")->excludes(j);
  }
  Format format() const { return json ? Format::Json : tsv ? Format::Tsv : Format::Text; }
};

void print_result_text(std::ostream& out, const ClassificationResult& r) {
  out << "beta(" << r.k << "," << r.n << ") = " << format_braid(r.word) << "\n";
  out << "two_bridge: " << boolean(r.is_two_bridge);
  if (r.two_bridge) out << " " << r.two_bridge->to_string();
  out << "\n";
  if (r.lens_space) out << "lens_space: " << r.lens_space->to_string() << "\n";
  if (r.witness) {
    out << "witness: standard_form(" << r.witness->p << "," << r.witness->q << ")"
        << (r.witness->mirrored ? " of the mirror" : "") << "\n";
  }
  out << "label: " << r.label.to_string() << "\n";
  out << "description: " << r.description << "\n";
}

void print_results(std::ostream& out, const std::vector<ClassificationResult>& rows, Format format) {
  switch (format) {
    case Format::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) arr.push_back(to_json(r));
      out << arr.dump(2) << "\n";
      break;
    }
    case Format::Tsv:
      out << tsv_header() << "\n";
      for (const auto& r : rows) out << to_tsv(r) << "\n";
      break;
    case Format::Text:
      for (const auto& r : rows) out << to_tsv(r) << "\n";
      break;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braid, two-bridge and lens space calculator for genus one fibered knots", "braidlens"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::string w1, w2, conway_text, strictness_text = "relaxed", k_text, n_text;
  std::string k_list, n_range;
  std::string p1, q1, p2, q2;
  std::uint64_t seed = 0;
  std::size_t steps = 20;
  bool unoriented = false;
  FormatFlags fmt;
  std::function<int()> action;

  auto* conjugate = app.add_subcommand("conjugate", "Decide conjugacy of two braids in B3");
  conjugate->add_option("W1", w1)->required();
  conjugate->add_option("W2", w2)->required();
  conjugate->callback([&] {
    action = [&] {
      out << boolean(are_conjugate(parse_braid(w1), parse_braid(w2))) << "\n";
      return kExitOk;
    };
  });

  auto* equal = app.add_subcommand("equal", "Decide equality of two braids in B3");
  equal->add_option("W1", w1)->required();
  equal->add_option("W2", w2)->required();
  equal->callback([&] {
    action = [&] {
      out << boolean(equal_in_b3(parse_braid(w1), parse_braid(w2))) << "\n";
      return kExitOk;
    };
  });

  auto* nf = app.add_subcommand("nf", "Exponent sum, SL(2,Z) image and PSL(2,Z) cyclic normal form");
  nf->add_option("W", w1)->required();
  nf->callback([&] {
    action = [&] {
      const BraidWord w = parse_braid(w1);
      const SL2Matrix m = represent(w);
      const FreeProductWord c = cyclic_normal_form(project(w));
      out << "exponent_sum: " << exponent_sum(w) << "\n";
      out << "matrix: " << m << "\n";
      out << "trace: " << m.trace() << "\n";
      out << "monodromy: " << to_string(classify_monodromy(w)) << "\n";
      out << "cyclic_normal_form: " << (c.empty() ? "1" : c.to_string()) << "\n";
      return kExitOk;
    };
  });

  auto* beta_cmd = app.add_subcommand("beta", "Print the word (s2 s1 s2)^K s1^N");
  beta_cmd->add_option("K", k_text)->required();
  beta_cmd->add_option("N", n_text)->required();
  beta_cmd->callback([&] {
    action = [&] {
      out << format_braid(beta(parse_int(k_text, "K"), parse_int(n_text, "N"))) << "\n";
      return kExitOk;
    };
  });

  auto* det = app.add_subcommand("det", "Order of H1 of the double branched cover (0 = infinite)");
  det->add_option("W", w1)->required();
  det->callback([&] {
    action = [&] {
      out << homology_order(parse_braid(w1)) << "\n";
      return kExitOk;
    };
  });

  auto* closure = app.add_subcommand("closure", "Decide whether the closure is a two-bridge link");
  closure->add_option("W", w1)->required();
  fmt.attach(closure, false);
  closure->callback([&] {
    action = [&] {
      const auto c = is_two_bridge_closure(parse_braid(w1));
      if (fmt.format() == Format::Json) {
        nlohmann::ordered_json j;
        j["is_two_bridge"] = c.has_value();
        j["two_bridge"] = c ? nlohmann::ordered_json(c->form.to_string()) : nlohmann::ordered_json(nullptr);
        j["lens_space"] =
            c ? nlohmann::ordered_json(lens_space_of(c->form).to_string()) : nlohmann::ordered_json(nullptr);
        j["witness_p"] = c ? nlohmann::ordered_json(c->witness.p) : nlohmann::ordered_json(nullptr);
        j["witness_q"] = c ? nlohmann::ordered_json(c->witness.q) : nlohmann::ordered_json(nullptr);
        j["mirrored"] = c ? nlohmann::ordered_json(c->witness.mirrored) : nlohmann::ordered_json(nullptr);
        out << j.dump(2) << "\n";
      } else if (c) {
        out << "two_bridge: " << c->form.to_string() << "\n";
        out << "lens_space: " << lens_space_of(c->form).to_string() << "\n";
        out << "witness: standard_form(" << c->witness.p << "," << c->witness.q << ")"
            << (c->witness.mirrored ? " of the mirror" : "") << "\n";
      } else {
        out << "two_bridge: false\n";
      }
      return kExitOk;
    };
  });

  auto* classify = app.add_subcommand("classify", "Classify the knot from beta(K,N), K odd");
  classify->add_option("K", k_text)->required();
  classify->add_option("N", n_text)->required();
  fmt.attach(classify, true);
  classify->callback([&] {
    action = [&] {
      const auto r = classify_gof(parse_int(k_text, "K"), parse_int(n_text, "N"));
      switch (fmt.format()) {
        case Format::Json: out << to_json(r).dump(2) << "\n"; break;
        case Format::Tsv: print_results(out, {r}, Format::Tsv); break;
        case Format::Text: print_result_text(out, r); break;
      }
      return kExitOk;
    };
  });

  auto* table = app.add_subcommand("table", "Classify every beta(k,n) on a grid");
  table->add_option("--k", k_list, "Comma separated odd k values")->required();
  table->add_option("--n", n_range, "Inclusive range lo..hi")->required();
  fmt.attach(table, true);
  table->callback([&] {
    action = [&] {
      const auto [lo, hi] = parse_range(n_range);
      const auto rows = scan_table(parse_int_list(k_list, "k value"), lo, hi);
      print_results(out, rows, fmt.format() == Format::Text ? Format::Tsv : fmt.format());
      return kExitOk;
    };
  });

  auto* conway = app.add_subcommand("conway", "Evaluate a Conway notation, e.g. -2,2,-3");
  conway->add_option("LIST", conway_text)->required();
  conway->add_option("--strictness", strictness_text, "Murasugi bounds: relaxed or as-quoted")
      ->capture_default_str();
  conway->callback([&] {
    action = [&] {
      const ConwayTuple c = parse_conway(conway_text);
      const Strictness strictness = parse_strictness(strictness_text);
      const Fraction f = fraction_from_conway(c);
      out << "fraction: " << f.numerator << "/" << f.denominator << "\n";
      const TwoBridgeForm form = normalize_two_bridge(f.numerator, f.denominator);
      out << "two_bridge: " << form.to_string() << "\n";
      out << "lens_space: " << lens_space_of(form).to_string() << "\n";
      const auto index = murasugi_braid_index(form, strictness);
      out << "braid_index (" << to_string(strictness) << "): " << to_string(index.braid_index);
      if (index.witness) {
        out << " via (2" << index.witness->criterion << ") p=" << index.witness->p << " q=" << index.witness->q;
      }
      out << "\n";
      const auto st = stoimenow_form(form);
      out << "stoimenow_form: " << (st ? format_conway(*st) : "none") << "\n";
      return kExitOk;
    };
  });

  auto* lens_eq = app.add_subcommand("lens-eq", "Compare L(P1,Q1) and L(P2,Q2)");
  lens_eq->add_option("P1", p1)->required();
  lens_eq->add_option("Q1", q1)->required();
  lens_eq->add_option("P2", p2)->required();
  lens_eq->add_option("Q2", q2)->required();
  lens_eq->add_flag("--unoriented", unoriented, "Allow orientation reversal");
  lens_eq->callback([&] {
    action = [&] {
      const LensSpace a = make_lens_space(parse_int(p1, "P1"), parse_int(q1, "Q1"));
      const LensSpace b = make_lens_space(parse_int(p2, "P2"), parse_int(q2, "Q2"));
      out << boolean(lens_equiv(a, b, !unoriented)) << "\n";
      return kExitOk;
    };
  });

  auto* scramble_cmd = app.add_subcommand("scramble", "Rewrite W into an equal braid word");
  scramble_cmd->add_option("W", w1)->required();
  scramble_cmd->add_option("--seed", seed)->capture_default_str();
  scramble_cmd->add_option("--steps", steps)->capture_default_str();
  scramble_cmd->callback([&] {
    action = [&] {
      out << format_braid(scramble(parse_braid(w1), seed, steps)) << "\n";
      return kExitOk;
    };
  });

  auto* verify = app.add_subcommand("verify-paper", "Re-run the case analysis and named conjugacy claims");
  verify->callback([&] {
    action = [&] {
      const auto rows = verify_paper_claims();
      std::size_t passed = 0;
      for (const auto& row : rows) {
        out << (row.passed() ? "PASS" : "FAIL") << "  " << row.name << "  expected=" << boolean(row.expected)
            << " computed=" << boolean(row.computed) << "\n";
        if (row.passed()) ++passed;
      }
      out << passed << "/" << rows.size() << " checks passed\n";
      return passed == rows.size() ? kExitOk : kExitCheckFailed;
    };
  });

  try {
    // CLI11 consumes its argument vector back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace braidlens
