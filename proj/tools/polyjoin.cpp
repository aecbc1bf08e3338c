// Command-line front end for the polyjoin library.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "polyjoin/betti.hpp"
#include "polyjoin/io.hpp"
#include "polyjoin/joins.hpp"
#include "polyjoin/oracle.hpp"
#include "polyjoin/series.hpp"
#include "polyjoin/srings.hpp"
#include "polyjoin/topology.hpp"
#include "polyjoin/verify.hpp"

using namespace polyjoin;
using io::json;

namespace {

struct Options {
    std::string field = "f2";
    std::string mode = "full";
    std::string format = "text";
    std::uint64_t seed = 0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Field field_of(const std::string& s) { return s == "q" ? Field::Q : Field::F2; }
Mode mode_of(const std::string& s) { return s == "smash" ? Mode::smash : Mode::full; }

std::vector<std::string> split_labels(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

SimplicialComplex load_complex(const std::string& path) { return io::complex_from_json(io::read_file(path)); }

std::vector<SimplicialComplex> load_complexes(const std::vector<std::string>& paths) {
    std::vector<SimplicialComplex> out;
    for (const auto& p : paths) out.push_back(load_complex(p));
    return out;
}

std::string braces(const std::vector<std::string>& labels) {
    std::string s = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
    return s + "}";
}

void print_complex(const SimplicialComplex& k, const Options& o) {
    if (o.format == "json") {
        std::cout << io::complex_to_json(k).dump(2) << "\n";
        return;
    }
    std::cout << "vertices: " << braces(k.ground().labels()) << "\n";
    if (!k.ghost_vertices().empty()) std::cout << "ghosts: " << braces(k.ground().labels_of(k.ghost_vertices())) << "\n";
    if (!k.has_nonempty_face()) std::cout << "{}\n";
    for (Simplex f : k.facets()) std::cout << braces(k.ground().labels_of(f)) << "\n";
}

void print_series(const UniPoly& p, const Options& o) {
    if (o.format == "json")
        std::cout << io::series_to_json(p).dump(2) << "\n";
    else
        std::cout << p.to_string() << "\n";
}

void print_multipoly(const MultiPoly& p, const GroundSet& g, const Options& o) {
    if (o.format == "json")
        std::cout << io::multipoly_to_json(p, g).dump(2) << "\n";
    else
        std::cout << p.to_string(g) << "\n";
}

/// Splits "K L_1 ... L_m data" into complexes and the trailing data document.
struct ComposedInputs {
    SimplicialComplex k;
    std::vector<SimplicialComplex> ls;
    json data;
    GroundSet ground;
};

ComposedInputs composed_inputs(const std::vector<std::string>& files) {
    if (files.size() < 2) throw UsageError("expected <K.json> <L_1.json> ... <data.json>");
    ComposedInputs in;
    in.k = load_complex(files.front());
    in.ls = load_complexes({files.begin() + 1, files.end() - 1});
    in.data = io::read_file(files.back());
    if (in.ls.size() != in.k.vertex_count())
        throw UsageError("expected " + std::to_string(in.k.vertex_count()) + " block complexes");
    in.ground = composed_ground(in.k, in.ls);
    return in;
}

int report(const std::vector<CheckResult>& results) {
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << ": " << r.name << " (" << r.anchor << ")";
        if (!r.passed) std::cout << " - " << r.detail;
        std::cout << "\n";
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology of polyhedral products over polyhedral joins"};
    app.require_subcommand(1);
    Options o;
    int status = 0;
    std::function<void()> action;

    auto add_field = [&](CLI::App* c) {
        c->add_option("--field", o.field, "coefficient field")->check(CLI::IsMember({"f2", "q"}));
    };
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    std::string k_file, spec_file, face_arg, restrict_arg, subset_arg, j_arg;
    std::vector<std::string> files;
    int hochster_i = 0;
    bool reduced = false;

    auto* cx = app.add_subcommand("complex", "normalize and print a complex");
    cx->add_option("K", k_file)->required();
    add_format(cx);
    cx->callback([&] { action = [&] { print_complex(load_complex(k_file), o); }; });

    auto* lk = app.add_subcommand("link", "restricted link lk(s)|_R");
    lk->add_option("K", k_file)->required();
    lk->add_option("--face", face_arg, "comma-separated face");
    lk->add_option("--restrict", restrict_arg, "comma-separated restriction set (default: complement of the face)");
    add_format(lk);
    lk->callback([&] {
        action = [&] {
            const auto k = load_complex(k_file);
            const Simplex s = k.ground().simplex(split_labels(face_arg));
            const Simplex r = lk->count("--restrict") ? k.ground().simplex(split_labels(restrict_arg)) : k.ground().all() - s;
            print_complex(k.link_restricted(s, r), o);
        };
    });

    auto* sub = app.add_subcommand("subcomplex", "full subcomplex K_I");
    sub->add_option("K", k_file)->required();
    sub->add_option("--subset", subset_arg, "comma-separated vertex set")->required();
    add_format(sub);
    sub->callback([&] {
        action = [&] {
            const auto k = load_complex(k_file);
            print_complex(k.full_subcomplex(k.ground().simplex(split_labels(subset_arg))), o);
        };
    });

    auto* jn = app.add_subcommand("join", "polyhedral join from a join spec");
    jn->add_option("spec", spec_file)->required();
    add_format(jn);
    jn->callback([&] { action = [&] { print_complex(polyhedral_join(io::join_spec_from_json(io::read_file(spec_file))), o); }; });

    auto* cp = app.add_subcommand("compose", "composition K(L_1, ..., L_m)");
    cp->add_option("files", files, "K.json L_1.json ... L_m.json")->required();
    add_format(cp);
    cp->callback([&] {
        action = [&] {
            const auto k = load_complex(files.front());
            print_complex(compose(k, load_complexes({files.begin() + 1, files.end()})), o);
        };
    });

    auto* hm = app.add_subcommand("homology", "Betti numbers of |K|");
    hm->add_option("K", k_file)->required();
    add_field(hm);
    hm->callback([&] {
        action = [&] {
            const auto k = load_complex(k_file);
            const auto betti = betti_numbers(simplicial_chain_complex(k.facets(), false), field_of(o.field));
            UniPoly p;
            for (std::size_t d = 0; d < betti.size(); ++d) {
                std::cout << (d ? " " : "") << betti[d];
                p += UniPoly::monomial(static_cast<int>(d), static_cast<std::int64_t>(betti[d]));
            }
            std::cout << (betti.empty() ? "" : "\n") << p.to_string() << "\n";
        };
    });

    auto* se = app.add_subcommand("series", "Hilbert-Poincare series");
    se->require_subcommand(1);
    auto series_cmd = [&](const std::string& name, const std::string& help, std::function<UniPoly()> fn) {
        auto* c = se->add_subcommand(name, help);
        c->add_option("files", files)->required();
        add_field(c);
        add_format(c);
        c->add_option("--mode", o.mode)->check(CLI::IsMember({"full", "smash"}));
        if (name == "caa") c->add_flag("--reduced", reduced, "drop the unit");
        c->callback([&, fn] { action = [&, fn] { print_series(fn(), o); }; });
    };
    series_cmd("bbcg", "K.json pairs.json", [&] {
        if (files.size() != 2) throw UsageError("expected <K.json> <pairs.json>");
        const auto k = load_complex(files[0]);
        return bbcg_series(k, io::pairs_from_json(io::read_file(files[1]), k.ground()), mode_of(o.mode), field_of(o.field));
    });
    series_cmd("csc", "K.json L_1.json ... pairs.json", [&] {
        const auto in = composed_inputs(files);
        return csc_series(in.k, in.ls, io::pairs_from_json(in.data, in.ground), mode_of(o.mode), field_of(o.field));
    });
    series_cmd("empty", "K.json L_1.json ... pairs.json", [&] {
        const auto in = composed_inputs(files);
        return empty_series(in.k, in.ls, io::pairs_from_json(in.data, in.ground), mode_of(o.mode), field_of(o.field));
    });
    series_cmd("caa", "K.json L_1.json ... A.json", [&] {
        const auto in = composed_inputs(files);
        return caa_series(in.k, in.ls, io::cohomology_from_json(in.data, in.ground), field_of(o.field), reduced);
    });
    series_cmd("remark", "K.json L_1.json ... A.json", [&] {
        const auto in = composed_inputs(files);
        return remark_series(in.k, in.ls, io::cohomology_from_json(in.data, in.ground), field_of(o.field));
    });
    series_cmd("join", "spec.json pairs.json", [&] {
        if (files.size() != 2) throw UsageError("expected <spec.json> <pairs.json>");
        const auto spec = io::join_spec_from_json(io::read_file(files[0]));
        const auto pairs = io::pairs_from_json(io::read_file(files[1]), polyhedral_join(spec).ground());
        return join_series(spec, pairs, mode_of(o.mode), field_of(o.field));
    });

    auto* bt = app.add_subcommand("betti", "multigraded Betti numbers");
    bt->require_subcommand(1);
    auto* bpoly = bt->add_subcommand("poly", "beta-polynomial of Z_K(CA, A)");
    bpoly->add_option("files", files, "K.json A.json")->required()->expected(2);
    add_field(bpoly);
    add_format(bpoly);
    bpoly->callback([&] {
        action = [&] {
            const auto k = load_complex(files[0]);
            print_multipoly(beta_polynomial(k, io::cohomology_from_json(io::read_file(files[1]), k.ground()), field_of(o.field)),
                            k.ground(), o);
        };
    });
    auto* bcomp = bt->add_subcommand("compose", "beta-polynomial of a composition by substitution");
    bcomp->add_option("files", files, "K.json L_1.json ... A.json")->required();
    add_field(bcomp);
    add_format(bcomp);
    bcomp->callback([&] {
        action = [&] {
            const auto in = composed_inputs(files);
            print_multipoly(beta_compose(in.k, in.ls, io::cohomology_from_json(in.data, in.ground), field_of(o.field)),
                            in.ground, o);
        };
    });
    auto* bh = bt->add_subcommand("hochster", "Hochster Betti number dim H^{|J|-i-1}(K_J)");
    bh->add_option("K", k_file)->required();
    bh->add_option("-i", hochster_i)->required();
    bh->add_option("-J", j_arg, "comma-separated vertex set");
    add_field(bh);
    bh->callback([&] {
        action = [&] {
            const auto k = load_complex(k_file);
            std::cout << hochster_betti(k, hochster_i, k.ground().simplex(split_labels(j_arg)), field_of(o.field)) << "\n";
        };
    });

    auto print_generators = [](const MonomialSet& gens, const GroundSet& g) {
        for (Simplex s : gens) {
            const auto labels = g.labels_of(s);
            for (std::size_t i = 0; i < labels.size(); ++i) std::cout << (i ? "," : "") << labels[i];
            std::cout << "\n";
        }
    };
    auto* sr = app.add_subcommand("sr", "generalized Stanley-Reisner ideals");
    sr->require_subcommand(1);
    auto* srn = sr->add_subcommand("nonfaces", "minimal non-faces");
    srn->add_option("K", k_file)->required();
    srn->callback([&] {
        action = [&] {
            const auto k = load_complex(k_file);
            print_generators(minimal_nonfaces(k), k.ground());
        };
    });
    auto* src = sr->add_subcommand("compose", "generators of the composed ideal");
    src->add_option("files", files, "K.json L_1.json ...")->required();
    src->callback([&] {
        action = [&] {
            const auto k = load_complex(files.front());
            const auto ls = load_complexes({files.begin() + 1, files.end()});
            print_generators(sr_compose_generators(k, ls), composed_ground(k, ls));
        };
    });

    std::size_t sweep_vertices = 4, sweep_count = 100;
    auto* orc = app.add_subcommand("oracle", "cubical model of Z_K(D1, S0)");
    orc->require_subcommand(1);
    auto* rm = orc->add_subcommand("rmac", "Betti numbers of the real moment-angle complex");
    rm->add_option("K", k_file)->required();
    add_field(rm);
    add_format(rm);
    rm->callback([&] { action = [&] { print_series(rmac_betti_poly(load_complex(k_file), field_of(o.field)), o); }; });
    auto* ov = orc->add_subcommand("verify", "compare the oracle with the additive formula");
    ov->add_option("K", k_file)->required();
    add_field(ov);
    ov->callback([&] {
        action = [&] {
            const bool ok = verify_formula(load_complex(k_file), field_of(o.field));
            std::cout << (ok ? "PASS" : "FAIL") << "\n";
            status = ok ? 0 : 1;
        };
    });
    auto* sw = orc->add_subcommand("sweep", "verify seeded random complexes");
    sw->add_option("--vertices", sweep_vertices)->check(CLI::Range(1, 20));
    sw->add_option("--seed", o.seed);
    sw->add_option("--count", sweep_count);
    add_field(sw);
    sw->callback([&] {
        action = [&] {
            std::size_t failed = 0;
            for (std::size_t i = 0; i < sweep_count; ++i) {
                const auto k = random_complex(o.seed + i, sweep_vertices);
                if (!verify_formula(k, field_of(o.field))) {
                    ++failed;
                    std::cout << "FAIL: " << io::complex_to_json(k).dump() << "\n";
                }
            }
            std::cout << (sweep_count - failed) << "/" << sweep_count << " passed\n";
            status = failed ? 1 : 0;
        };
    });

    auto* vf = app.add_subcommand("verify", "bundled verification suites");
    vf->require_subcommand(1);
    vf->add_subcommand("paper", "the three worked examples")->callback([&] { action = [&] { status = report(verify_paper()); }; });
    auto* vp = vf->add_subcommand("properties", "invariant suites");
    vp->add_option("--seed", o.seed);
    vp->callback([&] { action = [&] { status = report(verify_properties(o.seed)); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        if (action) action();
    } catch (const io::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}
