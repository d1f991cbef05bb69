// ppw: exact computations with graded preprojective algebra quotients
// attached to words in the Coxeter group of an acyclic quiver.
//
// Exit codes: 0 all checks pass, 1 usage or computation error, 2 a semantic
// negative (word not sortable / a verification check failed).

#include "CLI11.hpp"
#include "ppw/render.hpp"
#include "ppw/reports.hpp"

#include <fstream>
#include <iostream>

using namespace ppw;

namespace {

struct CommonArgs {
    std::string quiver_file;
    std::string quiver_inline;
    std::string word_str;
    std::string field = "rat";
    uint64_t seed = 1;
    std::string json_path;
    bool diagram = false;
};

Word parse_word(const std::string& s) {
    Word w;
    std::string cur;
    for (char ch : s + " ") {
        if (isdigit((unsigned char)ch)) cur += ch;
        else {
            if (!cur.empty()) w.push_back(std::stoi(cur));
            cur.clear();
            if (!isspace((unsigned char)ch) && ch != ',')
                throw std::invalid_argument("bad word syntax near '" + std::string(1, ch) + "'");
        }
    }
    return w;
}

Quiver builtin_quiver(const std::string& name) {
    if (name == "A2") return parse_quiver("vertices: 1 2; arrows: a: 1->2");
    if (name == "A3") return parse_quiver("vertices: 1 2 3; arrows: a: 1->2; b: 2->3");
    if (name == "A4")
        return parse_quiver("vertices: 1 2 3 4; arrows: a: 1->2; b: 2->3; c: 3->4");
    if (name == "D4")
        return parse_quiver("vertices: 1 2 3 4; arrows: a: 1->2; b: 2->3; c: 2->4");
    if (name == "kronecker") return parse_quiver("vertices: 1 2; arrows: a: 1->2; b: 1->2");
    throw std::invalid_argument("unknown corpus type " + name);
}

Quiver load_quiver(const CommonArgs& args) {
    if (!args.quiver_inline.empty()) {
        try {
            return builtin_quiver(args.quiver_inline);
        } catch (const std::invalid_argument&) {
            return parse_quiver(args.quiver_inline);
        }
    }
    if (args.quiver_file.empty()) throw std::invalid_argument("no quiver given");
    std::ifstream in(args.quiver_file);
    if (!in) throw std::invalid_argument("cannot open " + args.quiver_file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_quiver(text);
}

void emit(const CommonArgs& args, const json& payload) {
    if (!args.json_path.empty()) {
        if (args.json_path == "-") {
            std::cout << payload.dump(2) << "\n";
        } else {
            std::ofstream out(args.json_path);
            out << payload.dump(2) << "\n";
        }
    }
}

int report_exit(const std::vector<RunReport>& reports) {
    for (auto& r : reports)
        if (!r.all_pass()) return 2;
    return 0;
}

void print_report(const RunReport& r) {
    for (auto& c : r.checks) {
        std::cout << "[" << c.status << "] " << r.suite << "/" << c.name;
        if (!c.reason.empty()) std::cout << " (" << c.reason << ")";
        std::cout << "\n";
    }
}

template <class F>
json module_json(const GModule<F>& x) {
    json j;
    j["table"] = dims_json(x);
    json acts = json::array();
    const DoubleQuiver& dq = x.dq();
    for (auto& ar : dq.arrows)
        for (int d = x.lo; d <= x.hi; ++d) {
            Mat<F> m = x.action(ar.id, d);
            if (!m.r || !m.c || m.is_zero()) continue;
            json e;
            e["arrow"] = ar.name;
            e["from_degree"] = d;
            json rows = json::array();
            for (int i = 0; i < m.r; ++i) {
                json row = json::array();
                for (int jj = 0; jj < m.c; ++jj) {
                    json cell;
                    cell["num"] = fnum_str(m.at(i, jj));
                    cell["den"] = fden_str(m.at(i, jj));
                    row.push_back(cell);
                }
                rows.push_back(row);
            }
            e["matrix"] = rows;
            acts.push_back(e);
        }
    j["actions"] = acts;
    return j;
}

template <class F>
DiagramLayers module_layers(const GModule<F>& x) {
    DiagramLayers out;
    for (auto& layer : radical_filtration(x)) out.push_back(layer);
    return out;
}

template <class F>
int cmd_sortable(const CommonArgs& args) {
    Quiver q = load_quiver(args);
    Word w = parse_word(args.word_str);
    if (!is_reduced(q, w)) {
        std::cerr << "error: word is not reduced\n";
        return 1;
    }
    auto f = sortable_factorize(q, w, admissible_coxeter_word(q));
    json j;
    j["schema"] = "ppw-report/1";
    j["word"] = word_json(w);
    j["sortable"] = f.ok;
    json blocks = json::array();
    for (size_t i = 0; i < f.blocks.size(); ++i) blocks.push_back(word_json(f.blocks[i]));
    j["blocks"] = blocks;
    if (!f.ok) j["offending_block"] = f.offending_block;
    emit(args, j);
    for (size_t i = 0; i < f.blocks.size(); ++i) {
        std::cout << (i ? " | " : "") << "c" << i << "=";
        for (size_t k = 0; k < f.blocks[i].size(); ++k)
            std::cout << (k ? " " : "") << f.blocks[i][k];
    }
    std::cout << "\n";
    if (!f.ok) {
        std::cout << "not sortable: support of block " << f.offending_block + 1
                  << " is not contained in block " << f.offending_block << "\n";
        return 2;
    }
    return 0;
}

template <class F>
int cmd_piw(const CommonArgs& args) {
    Quiver q = load_quiver(args);
    Word w = parse_word(args.word_str);
    WordWorld<F> world = build_world<F>(q, w);
    json j;
    j["schema"] = "ppw-report/1";
    j["field"] = FieldName<F>::get();
    j["word"] = word_json(w);
    j["total_dim"] = world.piw->total_dim();
    j["dims_by_degree"] = world.piw->dims();
    json cols = json::array();
    std::string text;
    for (int u : q.verts) {
        GModule<F> col = owner_projective(*world.piw, u, 0);
        json cj;
        cj["vertex"] = u;
        cj["dim"] = col.total_dim();
        cj["table"] = dims_json(col);
        cols.push_back(cj);
        if (args.diagram)
            text += render_diagram("Pi_w e_" + std::to_string(u), col.total_dim(),
                                   module_layers(col));
    }
    j["columns"] = cols;
    emit(args, j);
    std::cout << "Pi_w total dim " << world.piw->total_dim() << ", degrees 0.."
              << std::max(world.piw->topdeg(), 0) << "\n";
    if (args.diagram) std::cout << text;
    return 0;
}

template <class F>
int cmd_module(const CommonArgs& args, const std::string& which, int index) {
    Quiver q = load_quiver(args);
    Word w = parse_word(args.word_str);
    WordWorld<F> world = build_world<F>(q, w);
    std::vector<std::pair<std::string, GModule<F>>> mods;
    if (which == "Mi") {
        if (index < 1 || index > world.l()) throw std::invalid_argument("index out of range");
        mods.push_back({"M^" + std::to_string(index), world.Mi[index - 1]});
    } else if (which == "Li") {
        if (index < 1 || index > world.l()) throw std::invalid_argument("index out of range");
        mods.push_back({"L^" + std::to_string(index), layer_module(world, index)});
    } else if (which == "M") {
        if (!world.fact.ok) throw std::invalid_argument("word is not sortable");
        auto parts = tilting_object_parts(world);
        for (int i = 0; i <= world.m(); ++i)
            mods.push_back({"M part " + std::to_string(i), parts[i]});
    } else if (which == "T") {
        for (int u : q.verts)
            if (world.stats.last_pos.count(u)) {
                int pu = world.stats.last_pos.at(u);
                GModule<F> col = owner_projective(*world.piw, u, world.stats.repeats[pu - 1]);
                mods.push_back({"T column " + std::to_string(u), truncate_below(col, 0)});
            }
    } else {
        throw std::invalid_argument("unknown module kind " + which);
    }
    json j;
    j["schema"] = "ppw-report/1";
    j["modules"] = json::array();
    for (auto& [name, m] : mods) {
        json e = module_json(m);
        e["name"] = name;
        e["dim"] = m.total_dim();
        j["modules"].push_back(e);
        std::cout << (args.diagram
                          ? render_diagram(name, m.total_dim(), module_layers(m))
                          : name + ": dim " + std::to_string(m.total_dim()) + "\n");
    }
    emit(args, j);
    return 0;
}

template <class F>
int cmd_qw(const CommonArgs& args) {
    Quiver q = load_quiver(args);
    Word w = parse_word(args.word_str);
    QwPresentation p = build_word_quiver(q, w);
    json j;
    j["schema"] = "ppw-report/1";
    j["positions"] = p.l;
    json arrows = json::array();
    for (auto& a : p.arrows) {
        json e;
        e["src"] = a.src;
        e["tgt"] = a.tgt;
        e["deg"] = a.deg;
        e["kind"] = a.kind == QwArrow::Left ? "left" : (a.kind == QwArrow::FromBase ? "Q" : "Q*");
        arrows.push_back(e);
        std::cout << a.src << " -> " << a.tgt << "  deg " << a.deg << "  ["
                  << e["kind"].template get<std::string>() << "]\n";
    }
    j["arrows"] = arrows;
    auto audit = negative_arrow_audit(p, w);
    j["negative_arrow_audit"] = audit.ok;
    emit(args, j);
    return audit.ok ? 0 : 2;
}

template <class F>
int cmd_endo(const CommonArgs& args) {
    Quiver q = load_quiver(args);
    Word w = parse_word(args.word_str);
    EndPackage<F> pk = build_end_package<F>(q, w);
    json j;
    j["schema"] = "ppw-report/1";
    j["stable_graded_dim"] = pk.aw.table.dim();
    j["hereditary_quotient_dim"] = pk.bw.dim();
    std::cout << "stable graded endomorphism algebra: dim " << pk.aw.table.dim() << "\n";
    std::cout << "hereditary quotient: dim " << pk.bw.dim() << "\n";
    if (pk.aw.table.dim()) {
        Presentation<F> pres = presentation_from_table(pk.aw.table);
        j["presentation"] = pres.text();
        std::cout << pres.text() << "\n";
    }
    emit(args, j);
    return 0;
}

template <class F>
int cmd_gldim(const CommonArgs& args) {
    Quiver q = load_quiver(args);
    Word w = parse_word(args.word_str);
    RunReport rep = suite_gldim<F>(q, w, args.seed);
    print_report(rep);
    emit(args, rep.to_json());
    return report_exit({rep});
}

template <class F>
std::vector<RunReport> run_suites(const Quiver& q, const Word& w, const std::string& suite,
                                  uint64_t seed) {
    std::vector<RunReport> reports;
    auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
    if (want("tilting")) reports.push_back(suite_tilting<F>(q, w, seed));
    if (want("layers")) reports.push_back(suite_layer_tilting<F>(q, w, seed));
    if (want("endalg")) reports.push_back(suite_endalg<F>(q, w, seed));
    if (want("gldim")) reports.push_back(suite_gldim<F>(q, w, seed));
    if (want("reduction")) reports.push_back(suite_reduction<F>(q, w, seed));
    return reports;
}

template <class F>
int cmd_verify(const CommonArgs& args, const std::string& suite) {
    Quiver q = load_quiver(args);
    Word w = parse_word(args.word_str);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<RunReport> reports = run_suites<F>(q, w, suite, args.seed);
    json j;
    j["schema"] = "ppw-report/1";
    j["reports"] = json::array();
    for (auto& r : reports) {
        print_report(r);
        j["reports"].push_back(r.to_json());
    }
    j["millis"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    bool ok = true;
    for (auto& r : reports) ok = ok && r.all_pass();
    j["ok"] = ok;
    emit(args, j);
    return report_exit(reports);
}

template <class F>
int cmd_corpus(const CommonArgs& args, const std::string& type, int maxlen,
               const std::string& suite) {
    Quiver q = builtin_quiver(type);
    auto words = enumerate_sortable(q, maxlen);
    json j;
    j["schema"] = "ppw-report/1";
    j["type"] = type;
    j["max_len"] = maxlen;
    j["sortable_words"] = (int)words.size();
    j["words"] = json::array();
    int failures = 0;
    for (auto& f : words) {
        Word w = f.concat();
        json e;
        e["word"] = word_json(w);
        e["blocks"] = (int)f.blocks.size();
        auto reports = run_suites<F>(q, w, suite, args.seed);
        bool ok = true;
        json rr = json::array();
        for (auto& r : reports) {
            ok = ok && r.all_pass();
            rr.push_back(r.to_json());
        }
        e["ok"] = ok;
        if (!ok) {
            ++failures;
            e["reports"] = rr;
        }
        j["words"].push_back(e);
        std::cout << (ok ? "[PASS] " : "[FAIL] ");
        for (int u : w) std::cout << u << " ";
        std::cout << "\n";
    }
    j["failures"] = failures;
    emit(args, j);
    std::cout << words.size() << " sortable words of length <= " << maxlen << ", "
              << failures << " failures\n";
    return failures ? 2 : 0;
}

template <class F>
int dispatch(const std::string& cmd, const CommonArgs& args, const std::string& which,
             int index, const std::string& suite, const std::string& corpus_type,
             int maxlen) {
    if (cmd == "sortable") return cmd_sortable<F>(args);
    if (cmd == "piw") return cmd_piw<F>(args);
    if (cmd == "module") return cmd_module<F>(args, which, index);
    if (cmd == "qw") return cmd_qw<F>(args);
    if (cmd == "endo") return cmd_endo<F>(args);
    if (cmd == "gldim") return cmd_gldim<F>(args);
    if (cmd == "verify") return cmd_verify<F>(args, suite);
    if (cmd == "corpus") return cmd_corpus<F>(args, corpus_type, maxlen, suite);
    throw std::invalid_argument("unknown command");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded preprojective algebra quotients: construction and verification"};
    app.require_subcommand(1);
    CommonArgs args;
    std::string which = "Mi", suite = "all", corpus_type = "A2";
    int index = 1, maxlen = 4;

    auto add_common = [&](CLI::App* sub, bool needs_word) {
        sub->add_option("--quiver", args.quiver_file, "quiver description file");
        sub->add_option("-q,--quiver-text", args.quiver_inline,
                        "inline quiver text or a builtin name (A2, A3, A4, D4, kronecker)");
        if (needs_word) sub->add_option("--word", args.word_str, "word, e.g. \"1 2 3 1 2 1\"")->required();
        sub->add_option("--field", args.field, "scalar field: rat or gfp:P");
        sub->add_option("--seed", args.seed, "seed for randomized searches");
        sub->add_option("--json", args.json_path, "write a JSON report to this path ('-' for stdout)");
        sub->add_flag("--diagram", args.diagram, "print radical filtration diagrams");
    };

    add_common(app.add_subcommand("sortable", "factorize a word into Coxeter-word blocks"), true);
    add_common(app.add_subcommand("piw", "build the graded quotient algebra of a word"), true);
    {
        auto* sub = app.add_subcommand("module", "print one of the attached modules");
        add_common(sub, true);
        sub->add_option("--which", which, "Mi, Li, M, or T");
        sub->add_option("--index", index, "summand or layer index (1-based)");
    }
    add_common(app.add_subcommand("qw", "print the combinatorial quiver of the word"), true);
    add_common(app.add_subcommand("endo", "stable endomorphism algebras and presentations"), true);
    add_common(app.add_subcommand("gldim", "global dimensions of the stable algebras"), true);
    {
        auto* sub = app.add_subcommand("verify", "run verification suites on one word");
        add_common(sub, true);
        sub->add_option("--suite", suite, "tilting, layers, endalg, gldim, reduction, or all");
    }
    {
        auto* sub = app.add_subcommand("corpus", "verify every sortable word up to a length");
        add_common(sub, false);
        sub->add_option("--type", corpus_type, "A2, A3, A4, D4, or kronecker")->required();
        sub->add_option("--max-len", maxlen, "maximal word length");
        sub->add_option("--suite", suite, "suite selection as in verify");
    }

    CLI11_PARSE(app, argc, argv);
    std::string cmd = app.get_subcommands()[0]->get_name();
    try {
        if (args.field == "rat")
            return dispatch<Rat>(cmd, args, which, index, suite, corpus_type, maxlen);
        if (args.field.rfind("gfp:", 0) == 0) {
            GFp::set_modulus(std::stoull(args.field.substr(4)));
            return dispatch<GFp>(cmd, args, which, index, suite, corpus_type, maxlen);
        }
        std::cerr << "error: unknown field " << args.field << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
