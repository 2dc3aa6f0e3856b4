#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bosonic/braid.hpp"
#include "bosonic/braidaction.hpp"
#include "bosonic/cache.hpp"
#include "bosonic/pbw.hpp"
#include "bosonic/text.hpp"
#include "bosonic/verify.hpp"

using namespace bosonic;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kGuardrail = 3 };

struct Session {
  std::string type = "A2";
  std::string cache_dir;
  std::string format = "text";
  int max_height = 10;

  bool jsonl() const { return format == "jsonl"; }

  std::unique_ptr<Algebra> algebra() const {
    std::string dir = cache_dir.empty() ? default_cache_dir() : cache_dir;
    if (!dir.empty()) std::filesystem::create_directories(dir);
    return std::make_unique<Algebra>(CartanDatum::from_name(type), AlgebraOptions{max_height, dir});
  }
};

void emit(const Session& s, const json& j, const std::string& text) {
  if (s.jsonl())
    std::cout << j.dump() << "\n";
  else
    std::cout << text << "\n";
}

json expansion_json(const PbwExpansion& e) {
  json out = json::array();
  for (const auto& [d, c] : e) out.push_back({{"index", d}, {"coeff", c.to_q_string()}});
  return out;
}

std::string expansion_text(const PbwExpansion& e) {
  if (e.empty()) return "0";
  std::string s;
  for (const auto& [d, c] : e) s += (s.empty() ? "" : "\n") + pbw_index_to_string(d) + " : " + c.to_q_string();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the bosonic extension of a quantum group"};
  app.require_subcommand(1);
  app.fallthrough();
  Session S;
  app.add_option("--type", S.type, "Cartan type, e.g. A2, B3, G2")->capture_default_str();
  app.add_option("--cache-dir", S.cache_dir, "Slice basis cache directory (default: $BOSONIC_CACHE_DIR)");
  app.add_option("--format", S.format, "Output format")->check(CLI::IsMember({"text", "jsonl"}))->capture_default_str();
  app.add_option("--max-height", S.max_height, "Largest slice weight height enumerated")->capture_default_str();

  int code = kOk;

  // nf
  std::string nf_text;
  auto* nf = app.add_subcommand("nf", "Normal form of an element");
  nf->add_option("element", nf_text)->required();
  nf->callback([&] {
    auto A = S.algebra();
    Element x = A->normal_form(parse_element(nf_text, A->cartan()));
    emit(S, {{"nf", x.to_string()}}, x.to_string());
  });

  // pair
  std::string px, py;
  auto* pair = app.add_subcommand("pair", "The invariant form of two elements");
  pair->add_option("x", px)->required();
  pair->add_option("y", py)->required();
  pair->callback([&] {
    auto A = S.algebra();
    RatFunc v = A->form(parse_element(px, A->cartan()), parse_element(py, A->cartan()));
    emit(S, {{"pair", v.to_q_string()}}, v.to_q_string());
  });

  // weight
  std::string wt_text;
  auto* weight = app.add_subcommand("weight", "Weight of a homogeneous element");
  weight->add_option("element", wt_text)->required();
  weight->callback([&] {
    auto A = S.algebra();
    RootVec w = A->weight(parse_element(wt_text, A->cartan()));
    emit(S, {{"weight", w}}, root_to_string(w));
  });

  // act
  std::string act_word, act_text;
  bool act_inverse = false;
  auto* act = app.add_subcommand("act", "Apply T_{i_1} ... T_{i_n} to an element");
  act->add_option("--word", act_word, "Comma-separated index word")->required();
  act->add_flag("--inverse", act_inverse, "Use the inverse operators");
  act->add_option("element", act_text)->required();
  act->callback([&] {
    auto A = S.algebra();
    IndexWord w = parse_index_word(act_word);
    for (Node i : w) A->cartan().check_node(i);
    Element x = T_word(*A, w, parse_element(act_text, A->cartan()), act_inverse ? -1 : 1);
    emit(S, {{"result", x.to_string()}}, x.to_string());
  });

  // braid
  auto* braid = app.add_subcommand("braid", "Positive braid words");
  braid->require_subcommand(1);
  std::vector<std::string> bw;
  auto words = [&](std::size_t n) {
    CartanDatum cd = CartanDatum::from_name(S.type);
    std::vector<BraidWord> out;
    for (const auto& t : bw) {
      BraidWord w = parse_index_word(t);
      for (Node i : w) cd.check_node(i);
      out.push_back(w);
    }
    if (out.size() != n) throw CLI::ValidationError("expected " + std::to_string(n) + " word(s)");
    return std::make_pair(cd, out);
  };
  auto* bnf = braid->add_subcommand("nf", "Garside left normal form");
  bnf->add_option("words", bw)->required();
  bnf->callback([&] {
    auto [cd, w] = words(1);
    GarsideForm g = garside_normal_form(cd, w[0]);
    json j{{"delta_power", g.delta_power}, {"factors", json::array()}};
    for (const auto& f : g.factor_words(cd)) j["factors"].push_back(f);
    emit(S, j, g.to_string(cd));
  });
  auto* bgcd = braid->add_subcommand("gcd", "Greatest common prefix");
  bgcd->add_option("words", bw)->required();
  bgcd->callback([&] {
    auto [cd, w] = words(2);
    BraidWord g = braid_gcd(cd, w[0], w[1]);
    emit(S, {{"gcd", g}}, g.empty() ? "e" : word_to_string(g));
  });
  auto* beq = braid->add_subcommand("equal", "Equality in the braid monoid");
  beq->add_option("words", bw)->required();
  beq->callback([&] {
    auto [cd, w] = words(2);
    bool e = braid_equal(cd, w[0], w[1]);
    emit(S, {{"equal", e}}, e ? "true" : "false");
  });
  auto* bcomp = braid->add_subcommand("complete", "Find y with x y = Delta^m");
  bcomp->add_option("words", bw)->required();
  bcomp->callback([&] {
    auto [cd, w] = words(1);
    DeltaCompletion c = complete_to_delta_power(cd, w[0]);
    emit(S, {{"y", c.y}, {"m", c.m}}, "y = " + (c.y.empty() ? std::string("e") : word_to_string(c.y)) +
                                          ", m = " + std::to_string(c.m));
  });
  auto* bmoves = braid->add_subcommand("moves", "Single braid-move neighbors");
  bmoves->add_option("words", bw)->required();
  bmoves->callback([&] {
    auto [cd, w] = words(1);
    for (const auto& n : braid_move_neighbors(cd, w[0])) emit(S, {{"word", n}}, word_to_string(n));
  });

  // weyl
  auto* weyl = app.add_subcommand("weyl", "Weyl group words");
  weyl->require_subcommand(1);
  std::string ww;
  int lrs_len = 0;
  auto* wred = weyl->add_subcommand("reduced", "Lexicographically least reduced word of the same element");
  wred->add_option("word", ww)->required();
  wred->callback([&] {
    CartanDatum cd = CartanDatum::from_name(S.type);
    IndexWord w = parse_index_word(ww);
    for (Node i : w) cd.check_node(i);
    IndexWord r = WeylElement::from_word(cd, w).reduced_word(cd);
    emit(S, {{"reduced", r}, {"length", r.size()}}, r.empty() ? "e" : word_to_string(r));
  });
  auto* wlong = weyl->add_subcommand("longest", "Longest element");
  wlong->callback([&] {
    CartanDatum cd = CartanDatum::from_name(S.type);
    IndexWord w = longest_word(cd);
    emit(S, {{"word", w}}, word_to_string(w));
  });
  auto* wlrs = weyl->add_subcommand("lrs", "Extend a prefix to a locally reduced sequence");
  wlrs->add_option("--prefix", ww, "Comma-separated prefix");
  wlrs->add_option("--len", lrs_len, "Sequence length")->required();
  wlrs->callback([&] {
    CartanDatum cd = CartanDatum::from_name(S.type);
    IndexWord w = locally_reduced_sequence(cd, parse_index_word(ww), lrs_len);
    emit(S, {{"word", w}}, word_to_string(w));
  });

  // pbw
  auto* pbw = app.add_subcommand("pbw", "PBW root vectors and monomials");
  pbw->require_subcommand(1);
  std::string seq_text;
  int xi = 0, max_deg = 2, k = 0, t = 0;
  std::string member_text;
  auto datum = [&](Algebra& A) {
    IndexWord seq = parse_index_word(seq_text);
    for (Node i : seq) A.cartan().check_node(i);
    return std::make_unique<Pbw>(A, PbwDatum{seq, xi, 1});
  };
  for (auto* sc : {pbw->add_subcommand("vectors", "Root vectors F_k"), pbw->add_subcommand("gram", "Gram matrix of PBW monomials"),
                   pbw->add_subcommand("straighten", "Expand F_k F_t - q^{-(wt, wt)} F_t F_k"),
                   pbw->add_subcommand("member", "Coordinates of an element over PBW monomials")}) {
    sc->add_option("--seq", seq_text, "Comma-separated index sequence")->required();
    sc->add_option("--xi", xi, "Base level")->capture_default_str();
  }
  pbw->get_subcommand("gram")->add_option("--max-deg", max_deg, "Total degree bound")->capture_default_str();
  pbw->get_subcommand("straighten")->add_option("--k", k)->required();
  pbw->get_subcommand("straighten")->add_option("--t", t)->required();
  pbw->get_subcommand("member")->add_option("element", member_text)->required();
  pbw->get_subcommand("member")->add_option("--max-deg", max_deg, "Total degree bound (default: none)");

  pbw->get_subcommand("vectors")->callback([&] {
    auto A = S.algebra();
    auto P = datum(*A);
    for (int j = 1; j <= P->datum().last(); ++j) {
      const Element& F = P->F(j);
      emit(S, {{"k", j}, {"weight", P->root_weight(j)}, {"vector", F.to_string()}},
           "F_" + std::to_string(j) + " = " + F.to_string());
    }
  });
  pbw->get_subcommand("gram")->callback([&] {
    auto A = S.algebra();
    auto P = datum(*A);
    GramReport g = P->gram_matrix(P->indices_up_to(max_deg));
    for (std::size_t a = 0; a < g.indices.size(); ++a)
      for (std::size_t b = 0; b < g.indices.size(); ++b) {
        if (g.matrix[a][b].is_zero()) continue;
        emit(S, {{"d", g.indices[a]}, {"e", g.indices[b]}, {"value", g.matrix[a][b].to_q_string()}},
             pbw_index_to_string(g.indices[a]) + " " + pbw_index_to_string(g.indices[b]) + " : " +
                 g.matrix[a][b].to_q_string());
      }
    emit(S, {{"orthogonal", g.ok}, {"failure", g.failure}}, g.ok ? "orthogonal: yes" : "orthogonal: NO, " + g.failure);
    if (!g.ok) code = kVerifyFailed;
  });
  pbw->get_subcommand("straighten")->callback([&] {
    auto A = S.algebra();
    auto P = datum(*A);
    PbwExpansion e = P->straighten(k, t);
    if (S.jsonl())
      for (const auto& [d, c] : e) emit(S, {{"index", d}, {"coeff", c.to_q_string()}}, "");
    else
      std::cout << expansion_text(e) << "\n";
  });
  pbw->get_subcommand("member")->callback([&] {
    auto A = S.algebra();
    auto P = datum(*A);
    auto m = P->membership(parse_element(member_text, A->cartan()), pbw->get_subcommand("member")->count("--max-deg") ? max_deg : -1);
    if (!m) {
      emit(S, {{"member", false}}, "not a member");
      code = kVerifyFailed;
      return;
    }
    emit(S, {{"member", true}, {"coords", expansion_json(*m)}}, expansion_text(*m));
  });

  // verify
  std::string suite;
  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run an acceptance suite ('all' runs every suite)");
  verify->add_option("suite", suite)->required();
  verify->add_option("--len", vo.len, "Word length bound");
  verify->add_option("--max-deg", vo.max_deg, "Degree bound");
  verify->add_option("--samples", vo.samples, "Random samples per type");
  verify->add_option("--seed", vo.seed, "Random seed");
  verify->callback([&] {
    if (app.get_option("--type")->count()) vo.types = {S.type};
    vo.max_height = S.max_height;
    vo.cache_dir = S.cache_dir.empty() ? default_cache_dir() : S.cache_dir;
    if (!vo.cache_dir.empty()) std::filesystem::create_directories(vo.cache_dir);
    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    for (const auto& n : names) {
      SuiteReport r = run_suite(n, vo);
      for (const auto& c : r.checks) {
        emit(S, {{"suite", n}, {"check", c.name}, {"ok", c.ok}, {"detail", c.detail}},
             std::string(c.ok ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : "  [" + c.detail + "]"));
      }
      emit(S, {{"suite", n}, {"ok", r.ok()}, {"seconds", r.seconds}},
           std::string(r.ok() ? "PASS " : "FAIL ") + "suite " + n + " (" + std::to_string(r.seconds) + " s)");
      if (!r.ok()) code = kVerifyFailed;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const GuardrailError& e) {
    std::cerr << "guardrail: " << e.what() << "\n";
    return kGuardrail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
