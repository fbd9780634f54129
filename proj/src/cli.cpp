#include "semiband/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include "semiband/constructions.hpp"
#include "semiband/enumeration.hpp"
#include "semiband/green.hpp"
#include "semiband/isomorphism.hpp"
#include "semiband/properties.hpp"
#include "semiband/transformations.hpp"
#include "semiband/verification.hpp"

namespace semiband {

  namespace {
    namespace fs = std::filesystem;
    using nlohmann::json;

    // .tfm files are read as generators of a transformation semigroup.
    Semigroup load(std::string const& path) {
      if (fs::path(path).extension() == ".tfm") {
        return transformation_semigroup(read_tfm_file(path)).result;
      }
      return read_sgp_file(path);
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    void analyze(Semigroup const& S, std::ostream& out) {
      auto const g     = greens_structure(S);
      auto const E     = idempotents(S);
      auto const depth = depth_analysis(S);
      auto       opt   = [&](std::optional<Elem> x) {
        return x ? S.label(*x) : std::string("none");
      };
      std::vector<std::string> idem;
      for (Elem e : E.elements()) {
        idem.push_back(S.label(e));
      }
      out << fmt::format("order          {}\n", S.size());
      out << fmt::format("identity       {}\n", opt(S.identity()));
      out << fmt::format("zero           {}\n", opt(S.zero()));
      out << fmt::format("idempotents    {}: {}\n", E.count(), fmt::join(idem, " "));
      out << fmt::format("covered        {}\n", yes_no(is_idempotent_covered(S).covered));
      std::vector<std::size_t> chain;
      for (auto const& c : depth.chain) {
        chain.push_back(c.count());
      }
      out << fmt::format("E^k sizes      {}\n", fmt::join(chain, " "));
      if (depth.kind == DepthKind::semiband) {
        out << fmt::format("semiband       yes, depth {}\n", *depth.depth);
      } else {
        out << fmt::format("semiband       no, <E> has {} elements\n", depth.generated().count());
      }
      out << "green classes ";
      for (auto k : all_green_relations) {
        out << fmt::format(" {}={}", to_string(k), g.class_count(k));
      }
      out << '\n';
      out << fmt::format("natural order  {} pairs\n", natural_order(S).pair_count());
      out << "properties\n";
      for (Property p : all_properties) {
        if (requires_zero(p) && !S.zero()) {
          out << fmt::format("  {:<21} n/a (no zero)\n", to_string(p));
          continue;
        }
        auto const r = check_property(S, g, p);
        out << fmt::format("  {:<21} {}", to_string(p), yes_no(r.holds));
        if (!r.holds && !r.witness.empty()) {
          std::vector<std::string> w;
          for (Elem x : r.witness) {
            w.push_back(S.label(x));
          }
          out << fmt::format("  witness {}", fmt::join(w, " "));
        }
        out << '\n';
      }
    }

    json decode_json(Decoded const& d) {
      auto flag = [](Flag f) { return f == Flag::sigma ? "sigma" : "tau"; };
      return std::visit(
          [&](auto const& x) -> json {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, std::monostate>) {
              return "zero";
            } else if constexpr (std::is_same_v<X, Elem>) {
              return x;
            } else if constexpr (std::is_same_v<X, TripleElem>) {
              return {{"s", x.s}, {"t", x.t}, {"flag", flag(x.flag)}};
            } else if constexpr (std::is_same_v<X, FNormalForm>) {
              return {{"s", x.s}, {"t", x.t}, {"hsuffix", x.hsuffix}};
            } else if constexpr (std::is_same_v<X, ReesTriple>) {
              return {{"i", x.i}, {"a", x.a}, {"lambda", flag(x.lambda)}};
            } else {
              return x.images;
            }
          },
          d);
    }

    void write_construction(ConstructionBundle const& B,
                            std::string const&        kind,
                            std::string const&        source,
                            std::string const&        path,
                            std::ostream&             out) {
      write_sgp_file(path, B.result);
      json side{{"construction", kind},
                {"source", source},
                {"order", B.result.size()},
                {"notes", B.notes},
                {"elements", json::array()}};
      for (Elem i = 0; i < B.result.size(); ++i) {
        side["elements"].push_back(
            {{"index", i}, {"label", B.result.label(i)}, {"decode", decode_json(B.decode[i])}});
      }
      side["embedding"] = B.embedding ? json(B.embedding->map()) : json(nullptr);
      auto const sidecar = fs::path(path).replace_extension(".json");
      std::ofstream js(sidecar);
      if (!js) {
        throw InvalidInput(fmt::format("cannot write {}", sidecar.string()));
      }
      js << side.dump(2) << '\n';
      out << fmt::format("wrote {} (order {}) and {}\n", path, B.result.size(), sidecar.string());
    }

    ConstructionBundle construct(std::string const& kind, Semigroup const& S) {
      if (kind == "t") return build_T(S);
      if (kind == "r") return build_R(S, Side::right);
      if (kind == "l") return build_R(S, Side::left);
      if (kind == "tstar") return build_star(S, StarKind::T);
      if (kind == "rstar") return build_star(S, StarKind::R);
      if (kind == "f") return build_F(S);
      if (kind == "a") return build_A(S).bundle;
      if (kind == "phi") return build_Phi(S).bundle;
      throw InvalidInput(fmt::format("unknown construction '{}'", kind));
    }

    void print_green(Semigroup const& S, std::ostream& out) {
      auto const g = greens_structure(S);
      for (auto k : all_green_relations) {
        out << fmt::format("{}-classes ({}):", to_string(k), g.class_count(k));
        std::vector<bool> seen(S.size());
        for (Elem a = 0; a < S.size(); ++a) {
          if (seen[a]) {
            continue;
          }
          std::vector<std::string> members;
          for (Elem b : g.class_of(k, a)) {
            seen[b] = true;
            members.push_back(S.label(b));
          }
          out << fmt::format(" {{{}}}", fmt::join(members, " "));
        }
        out << '\n';
      }
    }

    std::vector<std::pair<std::string, Semigroup>> corpus_up_to(std::size_t max_order, bool regular_only) {
      std::vector<std::pair<std::string, Semigroup>> out;
      for (std::size_t n = 1; n <= max_order; ++n) {
        auto c = enumerate_semigroups(n, Modulo::isomorphism, max_order > default_order_cap);
        if (regular_only) {
          c = corpus_filter(c, Property::Regular);
        }
        for (std::size_t i = 0; i < c.members.size(); ++i) {
          out.emplace_back(fmt::format("s{}_{:04}", n, i), std::move(c.members[i]));
        }
      }
      return out;
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite semigroup embeddings into semibands"};
    app.require_subcommand(1);
    CliConfig cfg;

    std::string input, second, kind, dot_path;
    std::size_t degree = 0, order = 0, jobs = 1, samples = 16;
    bool        regular_only = false, no_timing = false, json_out = false, allow_five = false;
    std::string modulo = "iso";
    std::vector<std::string> claim_names;

    auto* an = app.add_subcommand("analyze", "order, idempotents, depth, Green classes, properties");
    an->add_option("file", input, ".sgp or .tfm file")->required();

    auto* co = app.add_subcommand("construct", "build a construction and write it as .sgp + .json");
    co->add_option("kind", kind, "t|r|l|tstar|rstar|f|a|phi|higgins")
        ->required()
        ->check(CLI::IsMember({"t", "r", "l", "tstar", "rstar", "f", "a", "phi", "higgins"}));
    co->add_option("file", input, "source semigroup");
    co->add_option("--degree", degree, "degree k for higgins");
    co->add_option("-o,--output", cfg.output, "output .sgp path")->required();

    auto* gr = app.add_subcommand("green", "Green's classes");
    gr->add_option("file", input)->required();
    gr->add_option("--dot", dot_path, "write an egg-box diagram in DOT");

    auto* is = app.add_subcommand("iso", "search for an isomorphism");
    is->add_option("a", input)->required();
    is->add_option("b", second)->required();

    auto* en = app.add_subcommand("enumerate", "all semigroups of order N");
    en->add_option("n", order)->required();
    en->add_option("-o,--output", cfg.output, "output directory")->required();
    en->add_option("--modulo", modulo, "none|iso|iso-anti")
        ->check(CLI::IsMember({"none", "iso", "iso-anti"}));
    en->add_flag("--allow-five", allow_five, "permit order 5");

    auto* ve = app.add_subcommand("verify", "check every claim over a corpus");
    ve->add_option("--max-order", cfg.max_order, "largest order enumerated");
    ve->add_option("--dir", input, "verify the .sgp files in DIR instead");
    ve->add_flag("--regular-only", regular_only);
    ve->add_option("--seed", cfg.seed);
    ve->add_option("--jobs", jobs);
    ve->add_option("--samples", samples, "sampled regular subsemigroups per member");
    ve->add_option("--claims", claim_names, "restrict to these claims")->delimiter(',');
    ve->add_flag("--no-timing", no_timing, "omit timings so output is byte-stable");
    ve->add_flag("--json", json_out);

    auto* bo = app.add_subcommand("bounds", "order bounds for depth-2 embeddings");
    bo->add_option("dir", input)->required();
    bo->add_flag("--json", json_out);
    bo->add_flag("--regular-only", regular_only, "skip non-regular members instead of failing");

    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.format     = json_out ? ReportFormat::json : ReportFormat::text;
    if (!input.empty()) {
      cfg.inputs.push_back(input);
    }
    if (!second.empty()) {
      cfg.inputs.push_back(second);
    }

    try {
      if (cfg.subcommand == "analyze") {
        analyze(load(input), out);
        return 0;
      }
      if (cfg.subcommand == "construct") {
        if (kind == "higgins") {
          if (degree == 0) {
            throw InvalidInput("higgins needs --degree K");
          }
          write_construction(higgins_T(degree), kind, fmt::format("degree {}", degree), cfg.output, out);
          return 0;
        }
        if (input.empty()) {
          throw InvalidInput(fmt::format("construct {} needs an input file", kind));
        }
        write_construction(construct(kind, load(input)), kind, input, cfg.output, out);
        return 0;
      }
      if (cfg.subcommand == "green") {
        auto const S = load(input);
        print_green(S, out);
        if (!dot_path.empty()) {
          std::ofstream dot(dot_path);
          if (!dot) {
            throw InvalidInput(fmt::format("cannot write {}", dot_path));
          }
          dot << eggbox_dot(S, greens_structure(S));
        }
        return 0;
      }
      if (cfg.subcommand == "iso") {
        auto const A = load(input);
        auto const B = load(second);
        auto const h = find_isomorphism(A, B);
        if (!h) {
          out << "not isomorphic\n";
          return 1;
        }
        std::vector<std::string> pairs;
        for (Elem a = 0; a < A.size(); ++a) {
          pairs.push_back(fmt::format("{}->{}", A.label(a), B.label((*h)(a))));
        }
        out << fmt::format("isomorphic: {}\n", fmt::join(pairs, " "));
        return 0;
      }
      if (cfg.subcommand == "enumerate") {
        Modulo const m = modulo == "none" ? Modulo::none
                         : modulo == "iso" ? Modulo::isomorphism
                                           : Modulo::iso_anti;
        auto const c = enumerate_semigroups(order, m, allow_five);
        export_corpus(c, cfg.output);
        out << fmt::format("{} semigroups of order {} (modulo {}) written to {}\n",
                           c.members.size(),
                           order,
                           to_string(m),
                           cfg.output);
        return 0;
      }
      if (cfg.subcommand == "verify") {
        std::vector<ClaimId> claims;
        for (auto const& name : claim_names) {
          auto id = claim_from_string(name);
          if (!id) {
            throw InvalidInput(fmt::format("unknown claim '{}'", name));
          }
          claims.push_back(*id);
        }
        if (claims.empty()) {
          claims = all_claims;
        }
        std::vector<std::pair<std::string, Semigroup>> members;
        if (!input.empty()) {
          for (auto& [name, S] : read_sgp_directory(input)) {
            if (!regular_only || check_property(S, Property::Regular).holds) {
              members.emplace_back(name, std::move(S));
            }
          }
        } else {
          if (cfg.max_order > order_cap(true)) {
            throw OrderTooLarge(fmt::format("--max-order {} exceeds the cap {}", cfg.max_order, order_cap(true)));
          }
          members = corpus_up_to(cfg.max_order, regular_only);
        }
        VerifyOptions opts;
        opts.seed    = cfg.seed;
        opts.jobs    = std::max<std::size_t>(1, jobs);
        opts.samples = samples;
        auto const report = verify_corpus(members, claims, opts);
        if (cfg.format == ReportFormat::json) {
          out << report.to_json(!no_timing).dump(2) << '\n';
        } else {
          out << report.to_text();
          for (ClaimId c : report.uncovered(claims)) {
            out << fmt::format("not exercised: {}\n", to_string(c));
          }
        }
        return report.all_pass() ? 0 : 1;
      }
      if (cfg.subcommand == "bounds") {
        auto members = read_sgp_directory(input);
        if (regular_only) {
          std::erase_if(members, [](auto const& m) { return !check_property(m.second, Property::Regular).holds; });
        }
        auto const reports = check_bounds(members);
        bool       ok      = true;
        json       all     = json::array();
        for (auto const& b : reports) {
          ok = ok && b.reg_bound_ok() && b.nm_bound_ok() && b.extremal_ok();
          all.push_back(to_json(b));
        }
        if (cfg.format == ReportFormat::json) {
          out << all.dump(2) << '\n';
        } else {
          out << fmt::format("{:<16} {:>2} {:>2} {:>2} {:>2} {:>5} {:>5} {:>5}  {}\n",
                             "member", "n", "m", "l", "r", "|R|", "|L|", "2n^2", "status");
          for (auto const& b : reports) {
            bool const good = b.reg_bound_ok() && b.nm_bound_ok() && b.extremal_ok();
            out << fmt::format("{:<16} {:>2} {:>2} {:>2} {:>2} {:>5} {:>5} {:>5}  {}{}\n",
                               b.member, b.n, b.m, b.l, b.r, b.r_size, b.l_size,
                               b.two_n_squared(), good ? "ok" : "VIOLATED",
                               b.tight() ? " tight" : "");
          }
        }
        return ok ? 0 : 1;
      }
    } catch (InternalError const& e) {
      err << "internal error: " << e.what() << '\n';
      return 1;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
    return 2;
  }

  int run_cli(int argc, char const* const* argv) {
    return run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
  }

}  // namespace semiband
