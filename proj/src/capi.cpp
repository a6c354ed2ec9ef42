#include "racah_verify.h"

#include "bratteli.hpp"
#include "diagalg.hpp"
#include "linalg.hpp"
#include "racah.hpp"
#include "su2rep.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

using nlohmann::json;

struct rv_session {
    unsigned lmax = 7;
    unsigned spin_cap = 8; // twice-integer
    std::string last_error;
};

namespace {

using namespace rv;

struct command_error : std::runtime_error {
    int code;
    command_error(int code, const std::string& msg) : std::runtime_error(msg), code(code) {}
};

Spin parse_spin(const rv_session& s, const std::string& text) {
    auto v = parse_rational(text);
    if (!v || *v < 0) throw command_error(RV_ERR_BAD_ARGUMENT, "bad spin: " + text);
    Rational twice = 2 * *v;
    if (twice.get_den() != 1)
        throw command_error(RV_ERR_BAD_ARGUMENT, "spin must be a half-integer: " + text);
    unsigned long t = twice.get_num().get_ui();
    if (t > s.spin_cap)
        throw command_error(RV_ERR_LIMIT, "spin " + text + " exceeds the configured cap");
    return Spin{static_cast<unsigned>(t)};
}

Rational parse_rat_arg(const std::string& text) {
    auto v = parse_rational(text);
    if (!v) throw command_error(RV_ERR_BAD_ARGUMENT, "bad rational: " + text);
    return *v;
}

void need_args(const std::vector<std::string>& args, std::size_t n, const char* what) {
    if (args.size() != n)
        throw command_error(RV_ERR_BAD_ARGUMENT,
                            std::string(what) + ": expected " + std::to_string(n) +
                                " argument(s), got " + std::to_string(args.size()));
}

json j_spins(const std::vector<Spin>& spins) {
    json a = json::array();
    for (Spin s : spins) a.push_back(to_string(s));
    return a;
}

json j_rats(const std::vector<Rational>& rs) {
    json a = json::array();
    for (const Rational& r : rs) a.push_back(to_string(r));
    return a;
}

json j_spin_values(const std::vector<Spin>& spins) {
    json a = json::array();
    for (Spin s : spins) a.push_back(to_string(s));
    return a;
}

struct Report {
    json results = json::array();
    std::vector<std::string> inconclusive;
    bool all_ok = true;

    void add(json entry, bool ok) {
        entry["verified"] = ok;
        results.push_back(std::move(entry));
        all_ok = all_ok && ok;
    }
    void add_inconclusive(json entry, const std::string& why) {
        entry["verified"] = nullptr;
        results.push_back(std::move(entry));
        inconclusive.push_back(why);
    }
};

json finish(const std::string& command, json inputs, Report&& rep) {
    return json{{"schema", 1},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"results", std::move(rep.results)},
                {"verified", rep.all_ok && rep.inconclusive.empty()},
                {"inconclusive", rep.inconclusive}};
}

std::array<Spin, 3> parse_triple(const rv_session& s, const std::vector<std::string>& args) {
    return {parse_spin(s, args[0]), parse_spin(s, args[1]), parse_spin(s, args[2])};
}

json cmd_bratteli(rv_session& s, const std::vector<std::string>& args) {
    need_args(args, 3, "bratteli");
    auto [j1, j2, j3] = parse_triple(s, args);
    const BratteliData d = build_bratteli(j1, j2, j3);
    const CouplingSets cs = coupling_sets(j1, j2, j3);
    json bottom = json::array();
    for (const auto& [l, mult] : d.bottom)
        bottom.push_back(json{{"spin", to_string(l)}, {"multiplicity", mult}});
    Report rep;
    rep.add(json{{"name", "diagram"},
                 {"top", to_string(d.top)},
                 {"middle", j_spins(d.middle)},
                 {"bottom", bottom},
                 {"dimension", centralizer_dim(j1, j2, j3)}},
            true);
    rep.add(json{{"name", "coupling-sets"},
                 {"j12", j_spin_values(cs.j12)},
                 {"j13", j_spin_values(cs.j13)},
                 {"j23", j_spin_values(cs.j23)},
                 {"j123", j_spin_values(cs.j123)},
                 {"m123", j_rats(cs.m123)},
                 {"m231", j_rats(cs.m231)},
                 {"m132", j_rats(cs.m132)}},
            true);
    return finish("bratteli", json{{"spins", json{args[0], args[1], args[2]}}},
                  std::move(rep));
}

json cmd_dim(rv_session& s, const std::vector<std::string>& args) {
    need_args(args, 3, "dim");
    auto [j1, j2, j3] = parse_triple(s, args);
    const std::size_t target = centralizer_dim(j1, j2, j3);
    const TensorContext ctx = build_context(j1, j2, j3);
    const std::size_t span = span_closure({ctx.k12, ctx.k23, ctx.k123}).size();
    Report rep;
    rep.add(json{{"name", "dimension"}, {"sum-of-squares", target}, {"span", span}},
            span == target);
    return finish("dim", json{{"spins", json{args[0], args[1], args[2]}}}, std::move(rep));
}

json cmd_kernel(rv_session& s, const std::vector<std::string>& args) {
    need_args(args, 3, "kernel");
    auto [j1, j2, j3] = parse_triple(s, args);
    const KernelReport kr = verify_kernel_on_matrices(j1, j2, j3);
    Report rep;
    for (const auto& [name, ok] : kr.relation_ok) rep.add(json{{"name", name}}, ok);
    rep.add(json{{"name", "casimir-identity"}}, kr.casimir_identity_ok);
    return finish("kernel", json{{"spins", json{args[0], args[1], args[2]}}}, std::move(rep));
}

json conjecture_entry(Report& rep, const ConjectureReport& cr) {
    json e{{"name", "conjecture"},
           {"lower", cr.lower},
           {"target", cr.target},
           {"method", cr.method}};
    if (cr.upper)
        e["upper"] = *cr.upper;
    else
        e["upper"] = nullptr;
    if (!cr.upper) {
        rep.add_inconclusive(std::move(e), "no dimension certificate within the truncation bound");
        return nullptr;
    }
    rep.add(std::move(e), cr.verified);
    return nullptr;
}

json cmd_conjecture(rv_session& s, const std::vector<std::string>& args) {
    need_args(args, 3, "conjecture");
    auto [j1, j2, j3] = parse_triple(s, args);
    const ConjectureReport cr = verify_conjecture(j1, j2, j3, s.lmax);
    Report rep;
    conjecture_entry(rep, cr);
    return finish("conjecture",
                  json{{"spins", json{args[0], args[1], args[2]}}, {"lmax", s.lmax}},
                  std::move(rep));
}

json cmd_characters(rv_session& s, const std::vector<std::string>& args) {
    need_args(args, 3, "characters");
    auto [j1, j2, j3] = parse_triple(s, args);
    const auto chars = decompose_by_central_character(j1, j2, j3, s.lmax);
    Report rep;
    for (const auto& cd : chars) {
        json e{{"name", "character"}, {"c", to_string(cd.c)}, {"expected", cd.expected}};
        if (cd.dim) {
            e["dim"] = *cd.dim;
            rep.add(std::move(e), *cd.dim == cd.expected);
        } else {
            e["dim"] = nullptr;
            rep.add_inconclusive(std::move(e), "character at c = " + to_string(cd.c) +
                                                  " did not certify");
        }
    }
    return finish("characters",
                  json{{"spins", json{args[0], args[1], args[2]}}, {"lmax", s.lmax}},
                  std::move(rep));
}

const char* hom_str(HomCheck h) {
    switch (h) {
    case HomCheck::verified: return "verified";
    case HomCheck::failed: return "failed";
    default: return "inconclusive";
    }
}

json cmd_s3(rv_session& s, const std::vector<std::string>& args) {
    need_args(args, 3, "s3");
    auto [j1, j2, j3] = parse_triple(s, args);
    const S3Report sr = verify_s3_invariance(j1, j2, j3, s.lmax);
    Report rep;
    rep.add(json{{"name", "set-laws"}}, sr.set_laws_ok);
    for (auto [name, h] : {std::pair{"phi1", sr.phi1}, std::pair{"phi2", sr.phi2}}) {
        json e{{"name", name}, {"status", hom_str(h)}};
        if (h == HomCheck::inconclusive)
            rep.add_inconclusive(std::move(e), std::string(name) + " undecided at the truncation");
        else
            rep.add(std::move(e), h == HomCheck::verified);
    }
    return finish("s3", json{{"spins", json{args[0], args[1], args[2]}}, {"lmax", s.lmax}},
                  std::move(rep));
}

json cmd_iso(rv_session& s, const std::vector<std::string>& args) {
    need_args(args, 1, "iso");
    const std::string& which = args[0];
    Report rep;
    if (which == "tl")
        rep.add(json{{"name", "iso:tl"}}, verify_tl_iso());
    else if (which == "brauer")
        rep.add(json{{"name", "iso:brauer"}}, verify_brauer_iso());
    else if (which == "bb")
        rep.add(json{{"name", "iso:bb"}}, verify_bB_iso());
    else if (which.rfind("btl:", 0) == 0)
        rep.add(json{{"name", "iso:" + which}}, verify_btl_iso(parse_spin(s, which.substr(4))));
    else
        throw command_error(RV_ERR_BAD_ARGUMENT, "unknown isomorphism target: " + which);
    return finish("iso", json{{"target", which}}, std::move(rep));
}

json cmd_hjk(rv_session& s, const std::vector<std::string>& args) {
    need_args(args, 3, "hjk");
    const Spin j = parse_spin(s, args[0]), k = parse_spin(s, args[1]);
    const Rational c = parse_rat_arg(args[2]);
    const HjkStatus st = verify_hjk(j, k, c, s.lmax);
    if (st == HjkStatus::excluded)
        throw command_error(RV_ERR_BAD_ARGUMENT,
                            "excluded case: needs j >= k and (j,k) != (1/2,1/2)");
    Report rep;
    json e{{"name", "hjk"}, {"basis", json{"1", "A", "B", "AB"}}};
    if (st == HjkStatus::inconclusive)
        rep.add_inconclusive(std::move(e), "closure not certified within the truncation bound");
    else
        rep.add(std::move(e), st == HjkStatus::verified);
    return finish("hjk",
                  json{{"j", args[0]}, {"k", args[1]}, {"c", args[2]}, {"lmax", s.lmax}},
                  std::move(rep));
}

json cmd_braid(rv_session& s, const std::vector<std::string>& args) {
    need_args(args, 2, "braid");
    const Spin j = parse_spin(s, args[0]);
    const Rational z = parse_rat_arg(args[1]);
    Report rep;
    rep.add(json{{"name", "braid"}}, verify_braid_remark(j, z, std::min(s.lmax, 6u)));
    return finish("braid", json{{"j", args[0]}, {"z", args[1]}}, std::move(rep));
}

json cmd_redundancy(rv_session& s, const std::vector<std::string>& args) {
    need_args(args, 2, "redundancy");
    const Spin j = parse_spin(s, args[0]), k = parse_spin(s, args[1]);
    RedundancyReport rr;
    try {
        rr = test_relation_redundancy(j, k, s.lmax);
    } catch (const std::invalid_argument& e) {
        throw command_error(RV_ERR_BAD_ARGUMENT, e.what());
    }
    Report rep;
    json e{{"name", "redundancy"}};
    e["full"] = rr.full_dim ? json(*rr.full_dim) : json(nullptr);
    e["reduced"] = rr.reduced_dim ? json(*rr.reduced_dim) : json(nullptr);
    if (!rr.full_dim || !rr.reduced_dim)
        rep.add_inconclusive(std::move(e), "dimension certificate missing");
    else
        rep.add(std::move(e), rr.unchanged);
    return finish("redundancy", json{{"j", args[0]}, {"k", args[1]}, {"lmax", s.lmax}},
                  std::move(rep));
}

// The fixed reference values used by the verification suite.
struct SuiteTriple {
    Spin j1, j2, j3;
    std::size_t dim;
};

const std::vector<SuiteTriple>& suite_triples() {
    static const std::vector<SuiteTriple> v = {
        {Spin{1}, Spin{1}, Spin{1}, 5},  {Spin{2}, Spin{2}, Spin{2}, 15},
        {Spin{2}, Spin{1}, Spin{1}, 6},  {Spin{3}, Spin{1}, Spin{1}, 6},
        {Spin{4}, Spin{1}, Spin{1}, 6},  {Spin{1}, Spin{2}, Spin{2}, 9},
        {Spin{3}, Spin{3}, Spin{3}, 34},
    };
    return v;
}

std::string triple_name(Spin a, Spin b, Spin c) {
    return to_string(a) + "," + to_string(b) + "," + to_string(c);
}

bool rat_set_eq(std::vector<Rational> a, std::vector<Rational> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

json cmd_paper_suite(rv_session& s, const std::vector<std::string>&) {
    Report rep;

    for (const auto& t : suite_triples()) {
        const std::string name = "dim:" + triple_name(t.j1, t.j2, t.j3);
        const std::size_t target = centralizer_dim(t.j1, t.j2, t.j3);
        const TensorContext ctx = build_context(t.j1, t.j2, t.j3);
        const std::size_t span = span_closure({ctx.k12, ctx.k23, ctx.k123}).size();
        rep.add(json{{"name", name}, {"expected", t.dim}, {"span", span}},
                target == t.dim && span == t.dim);
    }

    // Reference eigenvalue sets for the worked-out triples.
    {
        const CouplingSets cs = coupling_sets(Spin{1}, Spin{1}, Spin{1});
        const std::vector<Rational> m = {rat(7, 4), rat(-5, 4), rat(3, 4)};
        rep.add(json{{"name", "coupling:1/2,1/2,1/2"}},
                rat_set_eq(cs.m123, m) && rat_set_eq(cs.m231, m) && rat_set_eq(cs.m132, m));
    }
    {
        const CouplingSets cs = coupling_sets(Spin{2}, Spin{2}, Spin{2});
        const std::vector<Rational> m = {rat(-4), rat(-2), rat(0), rat(2), rat(4), rat(6)};
        rep.add(json{{"name", "coupling:1,1,1"}},
                rat_set_eq(cs.m123, m) && rat_set_eq(cs.m231, m) && rat_set_eq(cs.m132, m));
    }
    for (unsigned twice : {2u, 3u, 4u}) {
        const Spin j{twice};
        const Rational jv = j.value();
        const CouplingSets cs = coupling_sets(j, Spin{1}, Spin{1});
        const std::vector<Rational> m123 = {jv + rat(5, 4), -jv - rat(3, 4), jv + rat(1, 4),
                                            -jv + rat(1, 4)};
        const std::vector<Rational> m231 = {jv * (jv + 3), (jv + 2) * (jv - 1), jv * (jv + 1),
                                            (jv + 1) * (jv - 2)};
        rep.add(json{{"name", "coupling:" + to_string(j) + ",1/2,1/2"}},
                rat_set_eq(cs.m123, m123) && rat_set_eq(cs.m132, m123) &&
                    rat_set_eq(cs.m231, m231));
    }
    {
        const CouplingSets cs = coupling_sets(Spin{1}, Spin{2}, Spin{2});
        const std::vector<Rational> m231 = {rat(-9, 4), rat(-5, 4), rat(3, 4), rat(7, 4),
                                            rat(11, 4)};
        rep.add(json{{"name", "coupling:1/2,1,1"}}, rat_set_eq(cs.m231, m231));
    }
    {
        const CouplingSets cs = coupling_sets(Spin{3}, Spin{3}, Spin{3});
        const std::vector<Rational> m = {rat(-33, 4), rat(-21, 4), rat(-13, 4), rat(-9, 4),
                                         rat(-5, 4),  rat(7, 4),   rat(11, 4),  rat(15, 4),
                                         rat(27, 4),  rat(39, 4),  rat(51, 4)};
        rep.add(json{{"name", "coupling:3/2,3/2,3/2"}},
                rat_set_eq(cs.m123, m) && rat_set_eq(cs.m231, m) && rat_set_eq(cs.m132, m));
    }

    const std::vector<std::array<Spin, 3>> conj_cases = {
        {Spin{1}, Spin{1}, Spin{1}}, {Spin{2}, Spin{2}, Spin{2}}, {Spin{1}, Spin{2}, Spin{2}},
        {Spin{2}, Spin{1}, Spin{1}}, {Spin{3}, Spin{1}, Spin{1}}, {Spin{4}, Spin{1}, Spin{1}},
        {Spin{3}, Spin{3}, Spin{3}}, {Spin{2}, Spin{1}, Spin{2}}, {Spin{3}, Spin{1}, Spin{2}},
        {Spin{4}, Spin{1}, Spin{3}},
    };
    for (const auto& [a, b, c] : conj_cases) {
        const ConjectureReport cr = verify_conjecture(a, b, c, s.lmax);
        json e{{"name", "conjecture:" + triple_name(a, b, c)},
               {"lower", cr.lower},
               {"target", cr.target},
               {"method", cr.method}};
        if (!cr.upper)
            rep.add_inconclusive(std::move(e), "conjecture " + triple_name(a, b, c) +
                                                   ": no dimension certificate");
        else {
            e["upper"] = *cr.upper;
            rep.add(std::move(e), cr.verified);
        }
    }

    const std::vector<std::pair<std::array<Spin, 3>, std::vector<std::size_t>>> char_cases = {
        {{Spin{1}, Spin{1}, Spin{1}}, {1, 4}},
        {{Spin{2}, Spin{2}, Spin{2}}, {1, 4, 9, 1}},
        {{Spin{3}, Spin{3}, Spin{3}}, {1, 4, 9, 16, 4}},
    };
    for (const auto& [spins, dims] : char_cases) {
        const auto chars = decompose_by_central_character(spins[0], spins[1], spins[2], s.lmax);
        // Order-insensitive: the reference lists the summands by
        // descending central value.
        std::vector<std::size_t> got, expected = dims;
        bool ok = true;
        for (const auto& cd : chars) {
            if (!cd.dim || *cd.dim != cd.expected) ok = false;
            got.push_back(cd.expected);
        }
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        ok = ok && got == expected;
        rep.add(json{{"name",
                      "characters:" + triple_name(spins[0], spins[1], spins[2])}},
                ok);
    }

    rep.add(json{{"name", "iso:tl"}}, verify_tl_iso());
    rep.add(json{{"name", "iso:brauer"}}, verify_brauer_iso());
    for (unsigned twice : {2u, 3u, 4u})
        rep.add(json{{"name", "iso:btl:" + to_string(Spin{twice})}},
                verify_btl_iso(Spin{twice}));
    rep.add(json{{"name", "iso:bb"}}, verify_bB_iso());

    for (const std::string& id : derived_identity_cases())
        rep.add(json{{"name", "identity:" + id}}, verify_derived_identity(id));

    {
        const S3Report sr = verify_s3_invariance(Spin{1}, Spin{2}, Spin{2}, s.lmax);
        rep.add(json{{"name", "s3:1/2,1,1"},
                     {"phi1", hom_str(sr.phi1)},
                     {"phi2", hom_str(sr.phi2)}},
                sr.ok());
    }

    for (const auto& [j, k, c] :
         std::vector<std::tuple<Spin, Spin, Rational>>{{Spin{2}, Spin{1}, rat(2)},
                                                       {Spin{3}, Spin{2}, rat(0)}}) {
        const HjkStatus st = verify_hjk(j, k, c, s.lmax);
        json e{{"name", "hjk:" + to_string(j) + "," + to_string(k) + ",c=" + to_string(c)}};
        if (st == HjkStatus::inconclusive)
            rep.add_inconclusive(std::move(e), "hjk closure undecided");
        else
            rep.add(std::move(e), st == HjkStatus::verified);
    }

    for (const auto& [j, z] : std::vector<std::pair<Spin, Rational>>{
             {Spin{2}, rat(1, 2)}, {Spin{3}, rat(1)}, {Spin{2}, rat(0)}})
        rep.add(json{{"name", "braid:" + to_string(j) + ",z=" + to_string(z)}},
                verify_braid_remark(j, z, std::min(s.lmax, 6u)));

    for (const auto& [j, k] :
         std::vector<std::pair<Spin, Spin>>{{Spin{2}, Spin{1}}, {Spin{3}, Spin{2}}}) {
        const RedundancyReport rr = test_relation_redundancy(j, k, s.lmax);
        json e{{"name", "redundancy:" + to_string(j) + "," + to_string(k)}};
        if (!rr.full_dim || !rr.reduced_dim)
            rep.add_inconclusive(std::move(e), "redundancy certificate missing");
        else
            rep.add(std::move(e), rr.unchanged);
    }

    return finish("paper-suite", json{{"lmax", s.lmax}}, std::move(rep));
}

json dispatch(rv_session& s, const std::string& cmd, const std::vector<std::string>& args) {
    if (cmd == "bratteli") return cmd_bratteli(s, args);
    if (cmd == "dim") return cmd_dim(s, args);
    if (cmd == "kernel") return cmd_kernel(s, args);
    if (cmd == "conjecture") return cmd_conjecture(s, args);
    if (cmd == "characters") return cmd_characters(s, args);
    if (cmd == "s3") return cmd_s3(s, args);
    if (cmd == "iso") return cmd_iso(s, args);
    if (cmd == "hjk") return cmd_hjk(s, args);
    if (cmd == "braid") return cmd_braid(s, args);
    if (cmd == "redundancy") return cmd_redundancy(s, args);
    if (cmd == "paper-suite") return cmd_paper_suite(s, args);
    throw command_error(RV_ERR_BAD_ARGUMENT, "unknown command: " + cmd);
}

} // namespace

extern "C" {

rv_session* rv_session_new(void) { return new (std::nothrow) rv_session; }

void rv_session_free(rv_session* s) { delete s; }

int rv_set_lmax(rv_session* s, unsigned lmax) {
    if (!s) return RV_ERR_BAD_ARGUMENT;
    if (lmax < 4 || lmax > 12) {
        s->last_error = "lmax must be in [4, 12]";
        return RV_ERR_BAD_ARGUMENT;
    }
    s->lmax = lmax;
    return RV_OK;
}

int rv_set_spin_cap(rv_session* s, unsigned twice_max) {
    if (!s) return RV_ERR_BAD_ARGUMENT;
    if (twice_max == 0 || twice_max > 16) {
        s->last_error = "spin cap (twice-integer) must be in [1, 16]";
        return RV_ERR_BAD_ARGUMENT;
    }
    s->spin_cap = twice_max;
    return RV_OK;
}

int rv_run(rv_session* s, const char* command, const char* const* args, size_t nargs,
           char** json_out) {
    if (!s) return RV_ERR_BAD_ARGUMENT;
    if (!command || !json_out || (nargs > 0 && !args)) {
        s->last_error = "null argument";
        return RV_ERR_BAD_ARGUMENT;
    }
    try {
        std::vector<std::string> argv;
        for (size_t i = 0; i < nargs; ++i) {
            if (!args[i]) {
                s->last_error = "null argument";
                return RV_ERR_BAD_ARGUMENT;
            }
            argv.emplace_back(args[i]);
        }
        const json report = dispatch(*s, command, argv);
        const std::string text = report.dump(2);
        char* buf = static_cast<char*>(std::malloc(text.size() + 1));
        if (!buf) {
            s->last_error = "out of memory";
            return RV_ERR_INTERNAL;
        }
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *json_out = buf;
        s->last_error.clear();
        return RV_OK;
    } catch (const command_error& e) {
        s->last_error = e.what();
        return e.code;
    } catch (const std::exception& e) {
        s->last_error = e.what();
        return RV_ERR_INTERNAL;
    }
}

void rv_string_free(char* str) { std::free(str); }

const char* rv_last_error(const rv_session* s) {
    return s ? s->last_error.c_str() : "null session";
}

} // extern "C"
