#include <racah_verify.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace {

// 0 = all checks verified, 1 = a check failed or an error occurred,
// 2 = at least one check was inconclusive (and none failed).
int exit_code_from_report(const std::string& text) {
    const auto report = nlohmann::json::parse(text, nullptr, false);
    if (report.is_discarded()) return 1;
    if (report.value("verified", false)) return 0;
    for (const auto& entry : report.value("results", nlohmann::json::array()))
        if (entry.contains("verified") && entry["verified"].is_boolean() &&
            !entry["verified"].get<bool>())
            return 1;
    return report.value("inconclusive", nlohmann::json::array()).empty() ? 1 : 2;
}

int run(rv_session* session, const std::string& command,
        const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    char* json_out = nullptr;
    const int rc = rv_run(session, command.c_str(), argv.data(), argv.size(), &json_out);
    if (rc != RV_OK) {
        std::fprintf(stderr, "error: %s\n", rv_last_error(session));
        return 1;
    }
    std::printf("%s\n", json_out);
    const int code = exit_code_from_report(json_out);
    rv_string_free(json_out);
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of su(2) tensor-product centralizer presentations"};
    app.require_subcommand(1);

    unsigned lmax = 7;
    unsigned spin_cap = 8;
    app.add_option("--lmax", lmax, "degree truncation for dimension certificates")
        ->check(CLI::Range(4u, 12u));
    app.add_option("--spin-cap", spin_cap, "largest accepted spin, as a twice-integer")
        ->check(CLI::Range(1u, 16u));

    struct Sub {
        const char* name;
        const char* help;
        std::vector<const char*> positionals;
    };
    const std::vector<Sub> subs = {
        {"bratteli", "coupling diagram and eigenvalue sets", {"j1", "j2", "j3"}},
        {"dim", "centralizer dimension: sum of squares vs matrix span", {"j1", "j2", "j3"}},
        {"kernel", "evaluate the quotient relations on Casimir matrices", {"j1", "j2", "j3"}},
        {"conjecture", "lower bound = upper bound = target dimension", {"j1", "j2", "j3"}},
        {"characters", "dimension of each central-character summand", {"j1", "j2", "j3"}},
        {"s3", "permutation symmetry of the quotients", {"j1", "j2", "j3"}},
        {"iso", "isomorphism with tl | brauer | btl:<j> | bb", {"target"}},
        {"hjk", "4-dimensional specialization at C = c", {"j", "k", "c"}},
        {"braid", "braid relations for the shifted generators", {"j", "z"}},
        {"redundancy", "re-certify with the removable relations dropped", {"j", "k"}},
        {"paper-suite", "run the whole reference suite", {}},
    };

    std::vector<std::vector<std::string>> values(subs.size());
    std::vector<CLI::App*> apps;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        CLI::App* sub = app.add_subcommand(subs[i].name, subs[i].help);
        values[i].resize(subs[i].positionals.size());
        for (std::size_t p = 0; p < subs[i].positionals.size(); ++p)
            sub->add_option(subs[i].positionals[p], values[i][p])->required();
        apps.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);

    rv_session* session = rv_session_new();
    if (!session) {
        std::fprintf(stderr, "error: cannot create session\n");
        return 1;
    }
    rv_set_lmax(session, lmax);
    rv_set_spin_cap(session, spin_cap);

    int code = 1;
    for (std::size_t i = 0; i < subs.size(); ++i)
        if (apps[i]->parsed()) code = run(session, subs[i].name, values[i]);
    rv_session_free(session);
    return code;
}
