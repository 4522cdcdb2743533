// nilmult: command-line front end for the nilmult library.
//
// Exit status: 0 success, 1 fixture failure, 2 bad arguments,
// 3 malformed group file, 4 resource cap exceeded.

#include "nilmult/bounds.hpp"
#include "nilmult/corpus.hpp"
#include "nilmult/free_nilpotent.hpp"
#include "nilmult/io.hpp"
#include "nilmult/multiplier.hpp"
#include "nilmult/witt_hall.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

namespace {

enum Exit { ok = 0, fixture_failure = 1, bad_arguments = 2, bad_group_file = 3, resource_limit = 4, internal = 5 };

int fail(Exit code, const char* tag, const std::string& msg) {
  std::cerr << "nilmult: error[" << tag << "]: " << msg << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace nilmult;
  CLI::App app{"c-nilpotent multipliers, Hall bases and bounds for finite p-groups", "nilmult"};
  app.require_subcommand(1);

  std::uint64_t witt_n = 0, witt_d = 0;
  auto* witt_cmd = app.add_subcommand("witt", "print chi_n(d), the number of basic commutators of weight n on d letters");
  witt_cmd->add_option("--n", witt_n, "weight")->required();
  witt_cmd->add_option("--d", witt_d, "number of letters")->required();

  unsigned hall_d = 0, hall_w = 0;
  bool hall_counts = false;
  auto* hall_cmd = app.add_subcommand("hall", "list the Hall basis up to a weight");
  hall_cmd->add_option("--d", hall_d, "number of letters")->required();
  hall_cmd->add_option("--max-weight", hall_w, "largest weight")->required();
  hall_cmd->add_flag("--counts", hall_counts, "print per-weight counts only");

  std::string group_spec;
  unsigned cls = 1;
  bool allow_d8_c1 = false;
  auto* mult_cmd = app.add_subcommand("multiplier", "print M^(c)(G) when it is known");
  mult_cmd->add_option("--group", group_spec, "group file or built-in name")->required();
  mult_cmd->add_option("--class", cls, "class c >= 1")->required();
  mult_cmd->add_flag("--allow-d8-c1", allow_d8_c1, "apply the D8 formula also at c = 1");

  std::string format = "text";
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate every bound for a group");
  bounds_cmd->add_option("--group", group_spec, "group file or built-in name")->required();
  bounds_cmd->add_option("--class", cls, "class c >= 1")->required();
  bounds_cmd->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  bounds_cmd->add_flag("--allow-d8-c1", allow_d8_c1, "apply the D8 formula also at c = 1");

  auto* cmp_cmd = app.add_subcommand("compare", "sort the upper bounds on |gamma_{c+1}(G)||M^(c)(G)|");
  cmp_cmd->add_option("--group", group_spec, "group file or built-in name")->required();
  cmp_cmd->add_option("--class", cls, "class c >= 1")->required();

  bool corpus_run = false;
  unsigned class_max = 3;
  bool corpus_quiet = false;
  auto* corpus_cmd = app.add_subcommand("corpus", "run the built-in corpus and fixtures");
  corpus_cmd->add_flag("--run", corpus_run, "execute the sweep")->required();
  corpus_cmd->add_option("--class-max", class_max, "largest class c in the sweep");
  corpus_cmd->add_flag("--quiet", corpus_quiet, "print failures and the summary only");

  unsigned coll_d = 0, coll_c = 0;
  std::string word;
  bool coll_labels = false;
  auto* collect_cmd = app.add_subcommand("collect", "normal form of a word in the free nilpotent group");
  collect_cmd->add_option("--d", coll_d, "number of letters")->required();
  collect_cmd->add_option("--class", coll_c, "nilpotency class")->required();
  collect_cmd->add_option("--word", word, "e.g. \"x2 x1^-1 x3\"")->required();
  collect_cmd->add_flag("--labels", coll_labels, "also print the normal form as a product of basic commutators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(bad_arguments, "bad_argument", e.what());
  }

  try {
    const Caps caps = Caps::from_env();
    BoundOptions opts;
    opts.caps = caps;
    opts.multiplier.d8_formula_at_c1 = allow_d8_c1;
    if (cls == 0) throw InvalidArgument("--class must be at least 1");

    if (*witt_cmd) {
      std::cout << witt(witt_n, witt_d) << "\n";
    } else if (*hall_cmd) {
      const auto basis = hall_basis(hall_d, hall_w, caps.basis);
      if (hall_counts) {
        for (unsigned w = 1; w <= hall_w; ++w) std::cout << w << " " << basis.stratum(w).size() << "\n";
      } else {
        for (std::size_t i = 0; i < basis.size(); ++i)
          std::cout << i << " " << basis[i].weight << " " << basis.to_string(i) << "\n";
      }
    } else if (*mult_cmd) {
      const auto in = resolve_group(group_spec, caps);
      std::optional<KnownMultiplier> m;
      if (in.abelian) m = known_multiplier({*in.abelian, cls}, opts.multiplier);
      else m = known_multiplier({in.group(caps), cls}, opts.multiplier);
      if (m) std::cout << m->value.to_string() << " (provenance: " << m->provenance << ")\n";
      else std::cout << "unknown\n";
    } else if (*bounds_cmd) {
      const auto in = resolve_group(group_spec, caps);
      const BoundContext ctx(in.group(caps), cls, opts);
      const auto reports = all_reports(ctx);
      if (format == "json") std::cout << dump_json(reports_to_json(ctx, in.name, reports));
      else if (format == "csv") std::cout << reports_to_csv(reports);
      else std::cout << reports_to_text(ctx, in.name, reports);
    } else if (*cmp_cmd) {
      const auto in = resolve_group(group_spec, caps);
      const BoundContext ctx(in.group(caps), cls, opts);
      std::cout << comparison_to_text(compare_bounds(ctx));
    } else if (*corpus_cmd) {
      const auto res = run_corpus(class_max, opts);
      for (const auto& line : res.lines)
        if (!corpus_quiet || line.rfind("FAIL", 0) == 0) std::cout << line << "\n";
      std::cout << res.checks << " checks, " << res.failures << " failures\n";
      if (!res.ok()) return fail(fixture_failure, "fixture_failure", std::to_string(res.failures) + " corpus checks failed");
    } else if (*collect_cmd) {
      const FreeNilpotentGroup f(coll_d, coll_c, caps);
      const auto nf = f.collect(parse_letter_word(word));
      std::cout << "[";
      for (std::size_t i = 0; i < nf.exponents.size(); ++i) std::cout << (i ? ", " : "") << nf.exponents[i];
      std::cout << "]\n";
      if (coll_labels) std::cout << f.to_string(nf) << "\n";
    }
  } catch (const GroupFileError& e) {
    return fail(bad_group_file, "malformed_group_file", e.what());
  } catch (const InvalidArgument& e) {
    return fail(bad_arguments, "bad_argument", e.what());
  } catch (const ResourceLimit& e) {
    return fail(resource_limit, "resource_limit", e.what());
  } catch (const std::exception& e) {
    return fail(internal, "internal", e.what());
  }
  return ok;
}
