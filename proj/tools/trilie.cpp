// Command-line front end: loads JSON definitions (or catalog names), runs the
// verifiers and constructors, and emits plain-text or deterministic JSON
// reports. Exit codes: 0 all checks passed, 1 a check failed, 2 input or
// usage error.

#include "CLI11.hpp"
#include "trilie/io.hpp"
#include "trilie/suite.hpp"

#include <functional>
#include <iostream>

using namespace trilie;
using io::json;

namespace {

struct CommonArgs {
  std::string format = "text";
  bool verbose = false;
  std::string alpha;
  std::string alg, r, delta, rep, op;
  std::string eqs = "b1,b2,b3";
  std::string constraints = "skew,b1,b2";
  std::string catalog_id;
  std::string k_weights = "1/3,1/3,1/3";
};

std::optional<Scalar> parse_alpha(const CommonArgs& a) {
  if (a.alpha.empty()) return std::nullopt;
  return Scalar(Scalar::parse_rational(a.alpha));
}

ThreeLieAlgebra load_algebra(const CommonArgs& a) {
  if (a.alg.empty()) throw invalid_input("--alg is required");
  return io::resolve_algebra(json(a.alg), parse_alpha(a));
}

RElement load_r(const CommonArgs& a, const ThreeLieAlgebra& A) {
  if (a.r.empty()) throw invalid_input("--r is required");
  return io::r_from_json(io::load_json_file(a.r), A);
}

Comultiplication load_delta(const CommonArgs& a, const ThreeLieAlgebra& A) {
  if (a.delta.empty()) throw invalid_input("--delta is required");
  return io::delta_from_json(io::load_json_file(a.delta), A);
}

Representation load_rep(const CommonArgs& a, const ThreeLieAlgebra* A) {
  if (a.rep.empty()) throw invalid_input("--rep is required");
  if (a.rep == "adjoint" || a.rep == "coadjoint") {
    if (!A) throw invalid_input("builtin representation needs --alg");
    return a.rep == "adjoint" ? adjoint_representation(*A)
                              : coadjoint_representation(*A);
  }
  return io::representation_from_json(io::load_json_file(a.rep), parse_alpha(a));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void print_text_report(const VerificationReport& rep, bool verbose) {
  std::cout << "check " << rep.check << ": " << (rep.passed ? "PASS" : "FAIL");
  if (rep.checked_count > 0) std::cout << " (checked " << rep.checked_count << ")";
  std::cout << "\n";
  if (rep.witness) {
    std::cout << "  witness at (";
    for (std::size_t i = 0; i < rep.witness->indices.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << rep.witness->indices[i];
    }
    std::cout << "), residual " << rep.witness->residual.str();
    if (!rep.witness->where.empty()) std::cout << " [" << rep.witness->where << "]";
    std::cout << "\n";
  }
  for (const auto& [name, ok] : rep.parts)
    std::cout << "  - " << name << ": " << (ok ? "ok" : "violated") << "\n";
  if (!rep.note.empty()) std::cout << "  note: " << rep.note << "\n";
  if (verbose)
    for (const Witness& w : rep.witnesses) {
      std::cout << "  also at (";
      for (std::size_t i = 0; i < w.indices.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << w.indices[i];
      }
      std::cout << "), residual " << w.residual.str() << "\n";
    }
}

int emit_reports(const std::vector<VerificationReport>& reports,
                 const CommonArgs& args) {
  bool all = true;
  if (args.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) {
      arr.push_back(io::report_to_json(r));
      all = all && r.passed;
    }
    std::cout << arr.dump() << "\n";
  } else {
    for (const auto& r : reports) {
      print_text_report(r, args.verbose);
      all = all && r.passed;
    }
  }
  return all ? 0 : 1;
}

int emit_document(const json& doc) {
  std::cout << doc.dump() << "\n";
  return 0;
}

VerifyOptions verify_options(const CommonArgs& a) {
  VerifyOptions opt;
  opt.all_witnesses = a.verbose;
  return opt;
}

std::vector<BialgebraEq> parse_eqs(const std::string& list) {
  std::vector<BialgebraEq> out;
  for (const std::string& name : split_list(list)) {
    if (name == "b1") out.push_back(BialgebraEq::b1);
    else if (name == "b2") out.push_back(BialgebraEq::b2);
    else if (name == "b3") out.push_back(BialgebraEq::b3);
    else if (name == "b1-variants") {
      out.push_back(BialgebraEq::b1_variant_mid);
      out.push_back(BialgebraEq::b1_variant_left);
    } else if (name == "b2-variants") {
      out.push_back(BialgebraEq::b2_variant_y);
      out.push_back(BialgebraEq::b2_variant_z);
    } else if (name == "b3-variants") {
      out.push_back(BialgebraEq::b3_variant_a);
      out.push_back(BialgebraEq::b3_variant_b);
    } else if (name == "derivation-style") {
      out.push_back(BialgebraEq::derivation_style);
    } else {
      throw invalid_input("unknown equation selector: " + name);
    }
  }
  if (out.empty()) throw invalid_input("no equations selected");
  return out;
}

std::set<BialgebraConstraint> parse_constraints(const std::string& list) {
  std::set<BialgebraConstraint> out;
  for (const std::string& name : split_list(list)) {
    if (name == "skew") out.insert(BialgebraConstraint::skew);
    else if (name == "b1") out.insert(BialgebraConstraint::b1);
    else if (name == "b2") out.insert(BialgebraConstraint::b2);
    else throw invalid_input("unknown constraint: " + name);
  }
  if (out.empty()) throw invalid_input("no constraints selected");
  return out;
}

int run_verify_paper(const CommonArgs& args) {
  auto items = suite::run_reference_suite();
  bool all = true;
  if (args.format == "json") {
    json arr = json::array();
    for (const auto& it : items) {
      json j;
      j["check"] = "criterion-" + std::to_string(it.id) + ": " + it.name;
      j["passed"] = it.passed;
      j["witness"] = nullptr;
      j["detail"] = it.detail;
      arr.push_back(j);
      all = all && it.passed;
    }
    std::cout << arr.dump() << "\n";
  } else {
    for (const auto& it : items) {
      std::cout << "[" << (it.passed ? "PASS" : "FAIL") << "] criterion " << it.id
                << " (" << it.name << "): " << it.detail << "\n";
      all = all && it.passed;
    }
  }
  return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for ternary Lie brackets, their "
               "comultiplications and double constructions"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonArgs args;
  app.add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--verbose", args.verbose, "collect all witnesses");
  app.add_option("--alpha", args.alpha, "parameter for catalog class dim4.6 (p/q)");

  std::function<int()> action;
  auto bind_common = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("--alg", args.alg, "algebra: file path or catalog name");
    sub->add_option("--r", args.r, "element file");
    sub->add_option("--delta", args.delta, "comultiplication file");
    sub->add_option("--rep", args.rep, "representation file, or adjoint/coadjoint");
    sub->add_option("--op", args.op, "operator file");
  };

  // ---- check ----
  CLI::App* check = app.add_subcommand("check", "run a verifier");
  check->require_subcommand(1);
  check->fallthrough();
  {
    CLI::App* fi = check->add_subcommand("fi", "fundamental identity of an algebra");
    bind_common(fi);
    fi->callback([&] {
      action = [&] {
        ThreeLieAlgebra A = load_algebra(args);
        return emit_reports({verify_fundamental_identity(A, verify_options(args)),
                             verify_equivalent_identities(A, verify_options(args))},
                            args);
      };
    });

    CLI::App* rep = check->add_subcommand("rep", "representation conditions");
    bind_common(rep);
    rep->callback([&] {
      action = [&] {
        Representation R = args.rep == "adjoint" || args.rep == "coadjoint"
                               ? [&] {
                                   ThreeLieAlgebra A = load_algebra(args);
                                   return load_rep(args, &A);
                                 }()
                               : load_rep(args, nullptr);
        return emit_reports({verify_representation(R, verify_options(args))}, args);
      };
    });

    CLI::App* prelie = check->add_subcommand("prelie", "ternary pre-Lie identities");
    bind_common(prelie);
    prelie->callback([&] {
      action = [&] {
        if (args.alg.empty()) throw invalid_input("--alg is required");
        PreLieAlgebra P = io::prelie_from_json(io::load_json_file(args.alg));
        return emit_reports({verify_prelie(P, verify_options(args))}, args);
      };
    });

    CLI::App* inv = check->add_subcommand(
        "invariance", "invariance of the standard pairing on the double");
    bind_common(inv);
    inv->callback([&] {
      action = [&] {
        ThreeLieAlgebra A = load_algebra(args);
        ThreeLieAlgebra dual = args.delta.empty()
                                   ? ThreeLieAlgebra::zero(A.dim())
                                   : dual_structure(load_delta(args, A));
        ThreeLieAlgebra D = double_bracket(A, dual);
        return emit_reports(
            {verify_invariance(D, plus_form(A.dim()), verify_options(args))}, args);
      };
    });

    CLI::App* manin = check->add_subcommand("manin", "standard Manin triple");
    bind_common(manin);
    manin->callback([&] {
      action = [&] {
        ThreeLieAlgebra A = load_algebra(args);
        ThreeLieAlgebra dual = dual_structure(load_delta(args, A));
        return emit_reports({verify_manin_triple(A, dual, verify_options(args))},
                            args);
      };
    });

    CLI::App* mp = check->add_subcommand("matched-pair",
                                         "coadjoint matched pair (reduced and full)");
    bind_common(mp);
    mp->callback([&] {
      action = [&] {
        ThreeLieAlgebra A = load_algebra(args);
        ThreeLieAlgebra dual = dual_structure(load_delta(args, A));
        MatchedPairData data{A, dual, coadjoint_representation(A),
                             coadjoint_representation(dual)};
        return emit_reports(
            {verify_matched_pair_reduced(A, dual, verify_options(args)),
             verify_matched_pair(data, verify_options(args))},
            args);
      };
    });

    CLI::App* bi = check->add_subcommand("bialgebra",
                                         "comultiplication compatibility equations");
    bind_common(bi);
    bi->add_option("--eqs", args.eqs,
                   "comma list: b1,b2,b3,b1-variants,b2-variants,b3-variants,"
                   "derivation-style");
    bi->callback([&] {
      action = [&] {
        ThreeLieAlgebra A = load_algebra(args);
        Comultiplication delta = load_delta(args, A);
        std::vector<VerificationReport> reports;
        {
          ReportBuilder rb("dual-skew");
          rb.count();
          if (!delta.induces_skew_dual()) rb.fail({}, Scalar(), "dual-skew");
          reports.push_back(rb.take());
        }
        if (reports[0].passed) {
          ReportBuilder rb("dual-fundamental-identity");
          VerificationReport fi = verify_fundamental_identity(dual_structure(delta));
          rb.raw().checked_count = fi.checked_count;
          if (!fi.passed) rb.fail(fi.witness->indices, fi.witness->residual);
          reports.push_back(rb.take());
        }
        auto eq_reports = verify_bialgebra_equations(A, delta, parse_eqs(args.eqs),
                                                     verify_options(args));
        for (auto& r : eq_reports) reports.push_back(std::move(r));
        return emit_reports(reports, args);
      };
    });
  }

  // ---- cybe ----
  CLI::App* cybe = app.add_subcommand("cybe", "ternary Yang-Baxter checks");
  cybe->require_subcommand(1);
  cybe->fallthrough();
  {
    CLI::App* c = cybe->add_subcommand("check", "is r a solution");
    bind_common(c);
    c->callback([&] {
      action = [&] {
        ThreeLieAlgebra A = load_algebra(args);
        return emit_reports({is_cybe_solution(load_r(args, A), verify_options(args))},
                            args);
      };
    });

    CLI::App* thm = cybe->add_subcommand(
        "thm-condition", "eight-term condition for a dual structure");
    bind_common(thm);
    thm->callback([&] {
      action = [&] {
        ThreeLieAlgebra A = load_algebra(args);
        RElement r = load_r(args, A);
        ThmConditionBreakdown bd;
        VerificationReport rep = verify_thm_condition(r, &bd, verify_options(args));
        if (args.format == "text" && args.verbose) {
          for (std::size_t x = 0; x < bd.summands.size(); ++x) {
            std::cout << "basis element " << x + 1 << ": nonzero summands:";
            for (int t = 0; t < 8; ++t)
              if (!bd.summands[x][t].is_zero()) std::cout << " " << t + 1;
            std::cout << "\n";
          }
        }
        return emit_reports({rep}, args);
      };
    });
  }

  // ---- derive ----
  CLI::App* derive = app.add_subcommand("derive", "run a constructor");
  derive->require_subcommand(1);
  derive->fallthrough();
  {
    CLI::App* d = derive->add_subcommand("delta", "comultiplication induced by r");
    bind_common(d);
    d->callback([&] {
      action = [&] {
        ThreeLieAlgebra A = load_algebra(args);
        return emit_document(io::delta_to_json(delta_from_r(load_r(args, A)).sum()));
      };
    });

    CLI::App* dbl = derive->add_subcommand("double", "double bracket on A + dual");
    bind_common(dbl);
    dbl->callback([&] {
      action = [&] {
        ThreeLieAlgebra A = load_algebra(args);
        ThreeLieAlgebra dual = args.delta.empty()
                                   ? ThreeLieAlgebra::zero(A.dim())
                                   : dual_structure(load_delta(args, A));
        return emit_document(io::algebra_to_json(double_bracket(A, dual)));
      };
    });

    CLI::App* semi = derive->add_subcommand("semidirect", "semidirect product");
    bind_common(semi);
    semi->callback([&] {
      action = [&] {
        ThreeLieAlgebra A = load_algebra(args);
        Representation R = load_rep(args, &A);
        if (!(R.algebra() == A))
          throw invalid_input("representation acts on a different algebra");
        return emit_document(io::algebra_to_json(semidirect_product(A, R)));
      };
    });

    CLI::App* otr = derive->add_subcommand(
        "o-to-r", "skew element from an operator, in the semidirect product");
    bind_common(otr);
    otr->callback([&] {
      action = [&] {
        if (args.op.empty()) throw invalid_input("--op is required");
        io::OperatorFile of =
            io::operator_from_json(io::load_json_file(args.op), parse_alpha(args));
        AlgebraWithR out = r_from_o_operator(of.matrix, of.algebra, of.rep);
        json doc;
        doc["algebra"] = io::algebra_to_json(out.algebra);
        doc["r"] = io::r_to_json(out.r);
        return emit_document(doc);
      };
    });

    CLI::App* can = derive->add_subcommand(
        "canonical-r", "canonical skew solution from a ternary pre-Lie product");
    bind_common(can);
    can->callback([&] {
      action = [&] {
        if (args.alg.empty()) throw invalid_input("--alg is required");
        PreLieAlgebra P = io::prelie_from_json(io::load_json_file(args.alg));
        AlgebraWithR out = canonical_r(P);
        json doc;
        doc["algebra"] = io::algebra_to_json(out.algebra);
        doc["r"] = io::r_to_json(out.r);
        return emit_document(doc);
      };
    });
  }

  // ---- solve ----
  CLI::App* solve = app.add_subcommand("solve", "exact linear solves");
  solve->require_subcommand(1);
  solve->fallthrough();
  {
    CLI::App* bs = solve->add_subcommand(
        "bialgebra-space", "kernel of the selected comultiplication constraints");
    bind_common(bs);
    bs->add_option("--constraints", args.constraints, "comma list: skew,b1,b2");
    bs->callback([&] {
      action = [&] {
        ThreeLieAlgebra A = load_algebra(args);
        const int n = A.dim();
        LinearSolveResult res =
            solve_bialgebra_space(A, parse_constraints(args.constraints));
        json doc;
        doc["unknowns"] = n * n * n * n;
        doc["rank"] = res.rank;
        doc["kernel_dimension"] = res.kernel_basis.size();
        json kernel = json::array();
        for (const Tensor& v : res.kernel_basis) {
          Tensor d(4, n);
          for (std::size_t p = 0; p < d.size(); ++p)
            d.flat(p) = v.at({static_cast<int>(p) + 1});
          kernel.push_back(io::delta_to_json(Comultiplication(A, std::move(d))));
        }
        doc["kernel"] = kernel;
        return emit_document(doc);
      };
    });
  }

  // ---- catalog ----
  CLI::App* cat = app.add_subcommand("catalog", "built-in algebras");
  cat->require_subcommand(1);
  cat->fallthrough();
  {
    CLI::App* list = cat->add_subcommand("list", "list catalog names");
    list->callback([&] {
      action = [&] {
        if (args.format == "json") {
          json arr = json::array();
          for (const auto& [id, desc] : catalog::list_entries())
            arr.push_back({{"id", id}, {"description", desc}});
          std::cout << arr.dump() << "\n";
        } else {
          for (const auto& [id, desc] : catalog::list_entries())
            std::cout << id << "  " << desc << "\n";
        }
        return 0;
      };
    });

    CLI::App* show = cat->add_subcommand("show", "print a catalog algebra");
    show->add_option("id", args.catalog_id, "catalog name")->required();
    show->callback([&] {
      action = [&] {
        return emit_document(io::algebra_to_json(
            catalog::get_algebra(catalog::parse_id(args.catalog_id, parse_alpha(args)))));
      };
    });
  }

  // ---- verify-paper ----
  CLI::App* vp = app.add_subcommand(
      "verify-paper", "run the full built-in reproduction battery");
  vp->callback([&] { action = [&] { return run_verify_paper(args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!action) {
    std::cerr << "no action selected\n";
    return 2;
  }
  try {
    return action();
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
