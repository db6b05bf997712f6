// Command-line front end: computes the mod-2 quadruple-point invariant and the
// supporting quadratic-form machinery from JSON files.  Exit codes: 0 success,
// 2 malformed input (parse or validation), 3 domain error; the stderr line
// starts with a machine-readable reason code.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadpoint/quadpoint.hpp"

namespace {

using nlohmann::json;
using namespace quadpoint;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_document(const std::string& path) {
    try {
        return json::parse(read_input(path));
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in \"" + path + "\": " + e.what());
    }
}

void print_error(const std::exception& e) {
    if (dynamic_cast<const Error*>(&e) != nullptr) {
        std::cerr << e.what() << "\n";
    } else {
        std::cerr << "parse-error: " << e.what() << "\n";
    }
}

void emit_bit(bool value, const std::string& output) {
    if (output == "json") {
        std::cout << json{{"value", value ? 1 : 0}}.dump() << "\n";
    } else {
        std::cout << (value ? 1 : 0) << "\n";
    }
}

void emit_document(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// Runs load() then op(); load failures exit 2, domain failures exit 3.
int staged(const std::function<void()>& load, const std::function<void()>& op) {
    try {
        load();
    } catch (const std::exception& e) {
        print_error(e);
        return 2;
    }
    try {
        op();
    } catch (const std::exception& e) {
        print_error(e);
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mod-2 quadruple-point invariant of surface embeddings"};
    app.require_subcommand(1);
    int status = 0;

    std::string left, right, form_path, map_path, embedding_path, subspace_path;
    std::string output = "plain";
    std::size_t genus = 0;
    std::size_t oracle_dim = 2;
    bool with_recipe = false;

    auto add_output = [&output](CLI::App* cmd) {
        cmd->add_option("--output", output, "output format")
            ->check(CLI::IsMember({"plain", "json"}));
    };

    CLI::App* q = app.add_subcommand("q", "invariant of a pair of embeddings");
    q->add_option("--left", left, "embedding JSON (or - for stdin)")->required();
    q->add_option("--right", right, "embedding JSON (or - for stdin)")->required();
    add_output(q);
    q->callback([&] {
        std::optional<EmbeddingData> e1, e2;
        status = staged(
            [&] {
                e1 = embedding_from_json(parse_document(left));
                e2 = embedding_from_json(parse_document(right));
            },
            [&] { emit_bit(quadruple_invariant(*e1, *e2), output); });
    });

    CLI::App* qs = app.add_subcommand("q-system", "invariant of systems of embeddings");
    qs->add_option("--left", left, "system JSON")->required();
    qs->add_option("--right", right, "system JSON")->required();
    add_output(qs);
    qs->callback([&] {
        SystemEmbedding s1, s2;
        status = staged(
            [&] {
                s1 = system_from_json(parse_document(left));
                s2 = system_from_json(parse_document(right));
            },
            [&] { emit_bit(q_system(s1, s2), output); });
    });

    CLI::App* ps = app.add_subcommand("psi", "rank parity of an orthogonal map");
    ps->add_option("--form", form_path, "quadratic form JSON")->required();
    ps->add_option("--map", map_path, "matrix JSON (array of row strings)")->required();
    add_output(ps);
    ps->callback([&] {
        std::optional<QuadForm> f;
        BitMat m;
        status = staged(
            [&] {
                f = quadform_from_json(parse_document(form_path));
                m = bitmat_from_json(parse_document(map_path));
            },
            [&] { emit_bit(psi(*f, m), output); });
    });

    CLI::App* ph = app.add_subcommand("psi-hat", "invariant of an ordered pair of decompositions");
    ph->add_option("--left", left, "decomposition JSON")->required();
    ph->add_option("--right", right, "decomposition JSON")->required();
    ph->add_flag("--recipe", with_recipe, "also print the difference-span cross-check");
    add_output(ph);
    ph->callback([&] {
        std::optional<Tsd> t1, t2;
        status = staged(
            [&] {
                t1 = tsd_from_json(parse_document(left));
                t2 = tsd_from_json(parse_document(right));
            },
            [&] {
                const bool v = psi_hat(*t1, *t2);
                if (!with_recipe) {
                    emit_bit(v, output);
                    return;
                }
                const bool rec = psi_hat_recipe(*t1, *t2);
                if (output == "json") {
                    std::cout << json{{"value", v ? 1 : 0}, {"recipe", rec ? 1 : 0}}.dump()
                              << "\n";
                } else {
                    std::cout << (v ? 1 : 0) << "\n" << "recipe " << (rec ? 1 : 0) << "\n";
                }
            });
    });

    CLI::App* qd = app.add_subcommand("q-diffeo", "invariant of twisting by a diffeomorphism");
    qd->add_option("--embedding", embedding_path, "embedding JSON")->required();
    qd->add_option("--map", map_path, "diffeomorphism JSON")->required();
    add_output(qd);
    qd->callback([&] {
        std::optional<EmbeddingData> e;
        std::optional<DiffeoData> h;
        status = staged(
            [&] {
                e = embedding_from_json(parse_document(embedding_path));
                h = diffeo_from_json(parse_document(map_path));
            },
            [&] { emit_bit(q_diffeo(*h, *e), output); });
    });

    CLI::App* pb = app.add_subcommand("pullback", "embedding data composed with a diffeomorphism");
    pb->add_option("--embedding", embedding_path, "embedding JSON")->required();
    pb->add_option("--map", map_path, "diffeomorphism JSON")->required();
    add_output(pb);
    pb->callback([&] {
        std::optional<EmbeddingData> e;
        std::optional<DiffeoData> h;
        status = staged(
            [&] {
                e = embedding_from_json(parse_document(embedding_path));
                h = diffeo_from_json(parse_document(map_path));
            },
            [&] { emit_document(to_json(pullback_by_diffeo(*e, *h))); });
    });

    CLI::App* co = app.add_subcommand("complete", "extend a totally singular half to a decomposition");
    co->add_option("--form", form_path, "quadratic form JSON")->required();
    co->add_option("--subspace", subspace_path, "subspace JSON (array of vectors)")->required();
    add_output(co);
    co->callback([&] {
        std::optional<QuadForm> f;
        std::optional<Subspace> a;
        status = staged(
            [&] {
                f = quadform_from_json(parse_document(form_path));
                a = subspace_from_json(parse_document(subspace_path), f->dim());
            },
            [&] { emit_document(to_json(complete_to_tsd(*f, *a))); });
    });

    CLI::App* st = app.add_subcommand("standard", "the unknotted embedding of a given genus");
    st->add_option("--genus", genus, "genus")->required();
    add_output(st);
    st->callback([&] {
        std::optional<EmbeddingData> e;
        status = staged([&] { e = standard_embedding(genus); },
                        [&] { emit_document(to_json(*e)); });
    });

    CLI::App* ck = app.add_subcommand("check", "validate an embedding file");
    ck->add_option("--embedding", embedding_path, "embedding JSON")->required();
    add_output(ck);
    ck->callback([&] {
        status = staged([&] { embedding_from_json(parse_document(embedding_path)); },
                        [&] {
                            if (output == "json") {
                                std::cout << json{{"valid", true}}.dump() << "\n";
                            } else {
                                std::cout << "valid\n";
                            }
                        });
    });

    CLI::App* orc = app.add_subcommand("oracle", "exhaustive small-dimension verification report");
    orc->add_option("--dim", oracle_dim, "dimension to enumerate")
        ->required()
        ->check(CLI::IsMember({2, 4}));
    add_output(orc);
    orc->callback([&] {
        status = staged(
            [] {},
            [&] {
                emit_document(to_json(oracle::verify_section2(QuadForm::standard(oracle_dim / 2))));
            });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage-error: " << e.what() << "\n";
        return 2;
    }
    return status;
}
