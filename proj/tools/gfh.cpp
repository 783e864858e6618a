// Command line front end: homology tables with oracle cross-checks, squeeze
// verdicts and the floating-point contact verification sweeps.
//
// Exit codes: 0 success / verdict produced, 1 verification failure,
// 2 usage error.

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gfh/contact.hpp"
#include "gfh/morse_bott.hpp"
#include "gfh/oracles.hpp"
#include "gfh/serialize.hpp"
#include "gfh/squeeze.hpp"

using namespace gfh;

namespace {

struct HomologyArgs {
    long n = 1;
    long k = 2;
    std::vector<long> weights;
    std::string R = "1/2";
    std::string a = "1";
    long max_degree = 8;
    bool equivariant = false;
    std::string coeff = "Fk";
    std::string format = "text";
};

int run_homology(const HomologyArgs& args) {
    std::vector<long> w =
        args.weights.empty() ? std::vector<long>(args.n, 1) : args.weights;
    LensData lens(args.n, args.k, w);
    Rational R = parse_rational(args.R);
    Rational a = parse_rational(args.a);
    Coeff coeff = args.coeff == "Z" ? Coeff::Z : Coeff::Fk;

    StabilizedTable st = stabilized_homology(lens, R, a, args.max_degree,
                                             args.equivariant, coeff);
    bool disagreement = false;
    json rows = json::array();
    for (long d = 1; d <= args.max_degree; ++d) {
        long chain_rank = st.table.rank(d);
        long oracle_rank =
            args.equivariant
                ? balls_homology_eq({args.n, args.k, R, a, d, true})
                : balls_homology({args.n, args.k, R, a, d, false});
        const char* marker;
        if (st.tower_sensitive.count(d)) {
            marker = "tower-sensitive";
        } else if (chain_rank == oracle_rank) {
            marker = "agree";
        } else {
            marker = "disagree";
            disagreement = true;
        }
        if (args.format == "json") {
            json tors = json::array();
            for (const Int& f : st.table.torsion(d)) tors.push_back(f.str());
            rows.push_back({{"degree", d},
                            {"chain_rank", chain_rank},
                            {"torsion", tors},
                            {"oracle_rank", oracle_rank},
                            {"marker", marker}});
        } else {
            std::string tors;
            for (const Int& f : st.table.torsion(d))
                tors += (tors.empty() ? "" : ",") + f.str();
            std::printf("degree %3ld  chain %ld%s%s%s  oracle %ld  %s\n", d,
                        chain_rank, tors.empty() ? "" : " torsion(",
                        tors.c_str(), tors.empty() ? "" : ")", oracle_rank,
                        marker);
        }
    }
    if (args.format == "json") {
        json out = {{"n", args.n},
                    {"k", args.k},
                    {"R", to_string(R)},
                    {"a", to_string(a)},
                    {"equivariant", args.equivariant},
                    {"coefficients", coeff == Coeff::Z ? "Z" : "Fk"},
                    {"degrees", rows}};
        std::printf("%s\n", out.dump(2).c_str());
    }
    return disagreement ? 1 : 0;
}

struct SqueezeArgs {
    long n = 1;
    long k = 2;
    std::string R;
    std::string Rp;
    bool equivariant = false;
    std::string format = "text";
};

int run_squeeze(const SqueezeArgs& args) {
    Rational R = parse_rational(args.R);
    Rational Rp = parse_rational(args.Rp);
    SqueezeVerdict v = args.equivariant
                           ? equivariant_verdict(args.n, args.k, R, Rp)
                           : nonequivariant_verdict(args.n, R, Rp);
    if (args.format == "json") {
        std::printf("%s\n", to_json(v, R, Rp).dump(2).c_str());
        return 0;
    }
    std::printf("status: %s\n", to_string(v.status));
    if (v.witness) std::printf("witness: %ld\n", *v.witness);
    if (v.degree) std::printf("degree: %ld\n", *v.degree);
    if (v.diagram)
        std::printf("diagram ranks (R'' > R, R, R'): %ld %ld %ld\n",
                    v.diagram->big, v.diagram->mid, v.diagram->small);
    return 0;
}

struct ContactArgs {
    long n = 1;
    long k = 2;
    std::vector<long> weights;
    long points = 200;
    unsigned seed = 1;
    std::string corrupt;
    std::string map = "sigma";
    std::string check = "contact";
    std::string format = "text";
};

int run_verify_contact(const ContactArgs& args) {
    std::vector<long> w =
        args.weights.empty() ? std::vector<long>(args.n, 1) : args.weights;
    LensData lens(args.n, args.k, w);
    std::mt19937 rng(args.seed);
    std::uniform_real_distribution<double> dist(-1, 1);

    contact::SigmaMap map = contact::sigma;
    if (args.corrupt == "sigma") map = contact::sigma_corrupted;
    if (args.map == "bhupal") map = contact::sigma_bhupal;
    const bool expected_negative =
        args.map == "bhupal" && args.check == "equivariance";

    double worst = 0;
    std::vector<double> worst_point;
    double tolerance;
    if (args.check == "equivariance") {
        tolerance = contact::kDefaultTolerances.closed_form;
        contact::RadialContactMap m;
        m.n = args.n;
        m.R = 1;
        m.rho = [](double s) { return 1.25 * (1 - s) * (1 - s); };
        m.drho = [](double s) { return -2.5 * (1 - s); };
        m.ddrho = [](double) { return 2.5; };
        contact::Contactomorphism phi = contact::radial_lift(m);
        for (long i = 0; i < args.points; ++i) {
            std::vector<double> q(2 * args.n + 1);
            for (auto& c : q) c = dist(rng);
            double r = contact::equivariance_residual_via(map, phi, lens, q);
            if (r > worst) {
                worst = r;
                worst_point = q;
            }
        }
    } else {
        tolerance = contact::kDefaultTolerances.finite_difference;
        for (long i = 0; i < args.points; ++i) {
            std::vector<double> flat(4 * args.n + 3);
            for (auto& c : flat) c = dist(rng);
            contact::ProductPoint pt =
                contact::ProductPoint::from_flat(flat, args.n);
            double r = contact::contact_factor_residual(map, pt, 1e-5).residual;
            if (r > worst) {
                worst = r;
                worst_point = flat;
            }
        }
    }

    bool pass = worst < tolerance;
    if (args.format == "json") {
        json out = residual_report(worst_point, 0.0, worst, tolerance);
        out.erase("lambda");
        out["check"] = args.check;
        out["map"] = args.map == "bhupal" ? "bhupal" : "sigma";
        out["points"] = args.points;
        out["seed"] = args.seed;
        if (expected_negative) out["expected_negative"] = true;
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::printf("check: %s  map: %s%s  points: %ld  seed: %u\n",
                    args.check.c_str(), args.map.c_str(),
                    args.corrupt.empty() ? "" : " (corrupted)", args.points,
                    args.seed);
        std::printf("max residual: %.3e  tolerance: %.1e  %s%s\n", worst,
                    tolerance, pass ? "PASS" : "FAIL",
                    !pass && expected_negative ? " (expected-negative)" : "");
    }
    if (expected_negative) return 0;
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact homology of prequantized balls with squeeze verdicts "
                 "and contact-formula verification"};
    app.require_subcommand(1);

    HomologyArgs ha;
    CLI::App* hom = app.add_subcommand(
        "homology", "Stabilized homology table with oracle cross-check");
    hom->add_option("-n", ha.n, "complex dimension");
    hom->add_option("-k", ha.k, "prime order of the cyclic group");
    hom->add_option("-w,--weights", ha.weights, "rotation weights");
    hom->add_option("-R", ha.R, "radius parameter, rational p/q");
    hom->add_option("-a", ha.a, "window parameter, rational p/q");
    hom->add_option("--max-degree", ha.max_degree, "top degree reported");
    hom->add_flag("--equivariant", ha.equivariant, "quotient computation");
    hom->add_option("--coeff", ha.coeff, "Fk or Z")
        ->check(CLI::IsMember({"Fk", "Z"}));
    hom->add_option("--format", ha.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    SqueezeArgs sa;
    CLI::App* sq = app.add_subcommand("squeeze", "Squeeze verdict");
    sq->add_option("-n", sa.n, "complex dimension");
    sq->add_option("-k", sa.k, "prime order of the cyclic group");
    sq->add_option("-R", sa.R, "source radius, rational p/q")->required();
    sq->add_option("--Rp", sa.Rp, "target radius, rational p/q")->required();
    sq->add_flag("--equivariant", sa.equivariant, "equivariant obstruction");
    sq->add_option("--format", sa.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    ContactArgs ca;
    CLI::App* vc = app.add_subcommand(
        "verify-contact", "Floating-point verification sweeps");
    vc->add_option("-n", ca.n, "complex dimension");
    vc->add_option("-k", ca.k, "prime order of the cyclic group");
    vc->add_option("-w,--weights", ca.weights, "rotation weights");
    vc->add_option("--points", ca.points, "sample count");
    vc->add_option("--seed", ca.seed, "random seed");
    vc->add_option("--corrupt", ca.corrupt,
                   "test hook: 'sigma' corrupts the embedding")
        ->check(CLI::IsMember({"sigma"}));
    vc->add_option("--map", ca.map, "sigma or bhupal")
        ->check(CLI::IsMember({"sigma", "bhupal"}));
    vc->add_option("--check", ca.check, "contact or equivariance")
        ->check(CLI::IsMember({"contact", "equivariance"}));
    vc->add_option("--format", ca.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (hom->parsed()) return run_homology(ha);
        if (sq->parsed()) return run_squeeze(sa);
        if (vc->parsed()) return run_verify_contact(ca);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
