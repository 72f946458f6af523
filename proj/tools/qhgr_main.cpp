// Command-line front end: quantum products by either route, multiplication
// tables, bounded Schur expansions, the bijection chain, coset membership,
// dualities, the acceptance suite, and the alcove SVG picture.
//
// Exit codes: 0 success, 1 usage or domain error, 2 verification mismatch.

#include "CLI11.hpp"
#include "json.hpp"

#include "qhgr/enumerate.hpp"
#include "qhgr/nilcox.hpp"
#include "qhgr/peterson.hpp"
#include "qhgr/quantum.hpp"
#include "qhgr/roots.hpp"
#include "qhgr/shapes.hpp"
#include "qhgr/svg.hpp"
#include "qhgr/textio.hpp"
#include "qhgr/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <tuple>
#include <vector>

namespace {

using namespace qhgr;

std::string qclass_to_csv(const QClass& x) {
    std::string out = "shape,qdeg,coeff\n";
    for (const auto& [key, c] : x.terms)
        out += "\"" + shape_to_text(key.second) + "\"," + std::to_string(key.first) + "," +
               std::to_string(c) + "\n";
    return out;
}

std::string render(const QClass& x, const std::string& format) {
    if (format == "json") return qclass_to_json(x) + "\n";
    if (format == "csv") return qclass_to_csv(x);
    return qclass_to_text(x) + "\n";
}

int cmd_qprod(i64 m, i64 n, const std::string& lhs, const std::string& rhs,
              const std::string& route, const std::string& format, bool trace) {
    Partition a = parse_shape(lhs), b = parse_shape(rhs);
    std::vector<std::string> stages;
    auto affine = [&] {
        PetersonContext ctx(m, n);
        return peterson_product(ctx, a, b, trace ? &stages : nullptr);
    };
    QClass result = qc_zero(m, n);
    bool match = true;
    if (route == "pieri") {
        result = qproduct(m, n, a, b);
    } else if (route == "affine") {
        result = affine();
    } else {
        QClass p = qproduct(m, n, a, b), q = affine();
        match = p == q;
        result = p;
        if (!match) {
            std::cerr << "pieri:  " << qclass_to_text(p) << "\n";
            std::cerr << "affine: " << qclass_to_text(q) << "\n";
        }
    }
    for (const auto& line : stages) std::cerr << line << "\n";
    if (!match) {
        std::cout << "MISMATCH\n";
        return 2;
    }
    if (route == "both" && format == "text")
        std::cout << qclass_to_text(result) << "  MATCH\n";
    else
        std::cout << render(result, format);
    return 0;
}

int cmd_table(i64 m, i64 n, const std::string& format) {
    auto shapes = partitions_in_box(m, n - m);
    std::sort(shapes.begin(), shapes.end());
    struct Row {
        Partition lhs, rhs;
        QClass val;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < shapes.size(); ++i)
        for (std::size_t j = i; j < shapes.size(); ++j)
            rows.push_back({shapes[i], shapes[j], qproduct(m, n, shapes[i], shapes[j])});
    if (format == "csv") {
        std::cout << "lhs,rhs,shape,qdeg,coeff\n";
        std::vector<std::tuple<Partition, Partition, i64, Partition, i64>> cells;
        for (const auto& r : rows)
            for (const auto& [key, c] : r.val.terms)
                cells.emplace_back(r.lhs, r.rhs, key.first, key.second, c);
        std::sort(cells.begin(), cells.end());
        for (const auto& [lhs, rhs, qdeg, shape, c] : cells)
            std::cout << "\"" << shape_to_text(lhs) << "\",\"" << shape_to_text(rhs) << "\",\""
                      << shape_to_text(shape) << "\"," << qdeg << "," << c << "\n";
    } else if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"lhs", shape_to_text(r.lhs)},
                           {"rhs", shape_to_text(r.rhs)},
                           {"terms", nlohmann::json::parse(qclass_to_json(r.val))}});
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : rows)
            std::cout << "s[" << shape_to_text(r.lhs) << "]*s[" << shape_to_text(r.rhs)
                      << "] = " << qclass_to_text(r.val) << "\n";
    }
    return 0;
}

int cmd_kschur(i64 n, const std::string& lam, bool noncommutative) {
    Partition p = parse_shape(lam);
    if (noncommutative)
        std::cout << nc_to_string(noncomm_kschur(n, p)) << "\n";
    else
        std::cout << kschur_factored(n, p) << "\n";
    return 0;
}

int cmd_bij(i64 n, const std::string& from, const std::string& value) {
    AffinePermutation w(n);
    if (from == "word") {
        Word word = parse_word(n, value);
        w = from_word(word);
        require(static_cast<i64>(word.letters.size()) == w.length(), "bij: word is not reduced");
        require(w.is_grassmannian(), "bij: word is not a reduced word of an increasing window");
    } else if (from == "core") {
        Partition core = parse_shape(value);
        require(is_core(n, core), "bij: not a core for this n");
        w = kbounded_to_grassmannian(n, core_to_kbounded(n, core));
    } else if (from == "kbounded") {
        w = kbounded_to_grassmannian(n, parse_shape(value));
    } else {
        w = AffinePermutation(n, parse_int_list(value, "window: expected comma-separated integers"));
        require(w.is_grassmannian(), "bij: window is not increasing");
    }
    Partition core = word_to_core(reduced_word(w));
    Partition kb = core_to_kbounded(n, core);
    std::cout << "window:     " << window_to_text(w) << "\n";
    std::cout << "word:       " << word_to_text(reduced_word(w)) << "\n";
    std::cout << "core:       " << shape_to_text(core) << "\n";
    std::cout << "kbounded:   " << shape_to_text(kb) << "\n";
    std::cout << "kconjugate: " << shape_to_text(kconjugate(n, kb)) << "\n";
    return 0;
}

int cmd_jp(i64 m, i64 n, const std::string& word) {
    auto w = from_word(parse_word(n, word));
    std::cout << (is_in_SnP(w, m) ? "in S~_n^P" : "NOT in S~_n^P") << "\n";
    return 0;
}

int cmd_duality(i64 m, i64 n, const std::string& shape, const std::string& map) {
    auto x = qc_class(m, n, parse_shape(shape));
    QClass img = map == "transpose"    ? dual_transpose(x)
                 : map == "complement" ? dual_complement(x)
                                       : strange_duality(x);
    std::cout << qclass_to_text(img) << "\n";
    return 0;
}

int cmd_verify(i64 max_n) {
    VerifyOptions opts;
    opts.max_n = max_n;
    bool all = true;
    run_acceptance(opts, [&all](const CriterionResult& r) {
        all = all && r.pass;
        std::printf("[%s] %-26s %8.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.seconds, r.detail.c_str());
        std::fflush(stdout);
    });
    std::cout << (all ? "verify: all criteria pass\n" : "verify: FAILURES present\n");
    return all ? 0 : 2;
}

int cmd_alcoves(i64 radius, const std::string& highlight, i64 m, const std::string& out) {
    auto kind = highlight == "jp" ? AlcoveHighlight::coset_set : AlcoveHighlight::grassmannian;
    std::string svg = alcove_svg(3, radius, kind, m);
    if (out.empty()) {
        std::cout << svg;
    } else {
        std::ofstream f(out, std::ios::binary);
        require(f.good(), "alcoves: cannot open output file " + out);
        f << svg;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Schubert products in QH*(Gr(m,n)) by the Pieri and affine routes"};
    app.require_subcommand(1);

    i64 m = 1, n = 3, radius = 2, max_n = 0;
    std::string lhs, rhs, lam, value, word, shape, out;
    std::string route = "pieri", format = "text", from = "word", map = "strange", highlight = "jp";
    bool trace = false, noncommutative = false;

    auto* qprod = app.add_subcommand("qprod", "multiply two Schubert classes");
    qprod->add_option("--m", m)->required();
    qprod->add_option("--n", n)->required();
    qprod->add_option("--lhs", lhs, "left shape, e.g. 2,1 (0 or empty for the identity)")->required();
    qprod->add_option("--rhs", rhs, "right shape")->required();
    qprod->add_option("--route", route)->check(CLI::IsMember({"pieri", "affine", "both"}));
    qprod->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    qprod->add_flag("--trace", trace, "write affine-route stage records to stderr as JSON lines");

    auto* table = app.add_subcommand("table", "full multiplication table of a Grassmannian");
    table->add_option("--m", m)->required();
    table->add_option("--n", n)->required();
    table->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* kschur = app.add_subcommand("kschur", "bounded Schur function as an h-polynomial");
    kschur->add_option("--n", n)->required();
    kschur->add_option("--lam", lam, "partition with parts < n")->required();
    kschur->add_flag("--noncommutative", noncommutative, "expand on the A_w basis instead");

    auto* bij = app.add_subcommand("bij", "bijection chain word/core/kbounded/window");
    bij->add_option("--n", n)->required();
    bij->add_option("--from", from)->required()->check(CLI::IsMember({"word", "core", "kbounded", "window"}));
    bij->add_option("--value", value)->required();

    auto* jp = app.add_subcommand("jp", "coset-set membership of an affine element");
    jp->add_option("--m", m)->required();
    jp->add_option("--n", n)->required();
    jp->add_option("--word", word, "reduced word, e.g. 1,0")->required();

    auto* duality = app.add_subcommand("duality", "apply a duality map to a Schubert class");
    duality->add_option("--m", m)->required();
    duality->add_option("--n", n)->required();
    duality->add_option("--shape", shape)->required();
    duality->add_option("--map", map)->check(CLI::IsMember({"transpose", "complement", "strange"}));

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--max-n", max_n, "clamp enumeration depth (default: full, or PETERSON_VERIFY_DEPTH)");

    auto* alcoves = app.add_subcommand("alcoves", "SVG alcove picture for n=3");
    alcoves->add_option("--radius", radius, "maximum word length drawn")->required();
    alcoves->add_option("--highlight", highlight)->check(CLI::IsMember({"jp", "grassmannian"}));
    alcoves->add_option("--m", m, "cut position used by --highlight jp");
    alcoves->add_option("--out", out, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(qprod)) return cmd_qprod(m, n, lhs, rhs, route, format, trace);
        if (app.got_subcommand(table)) return cmd_table(m, n, format);
        if (app.got_subcommand(kschur)) return cmd_kschur(n, lam, noncommutative);
        if (app.got_subcommand(bij)) return cmd_bij(n, from, value);
        if (app.got_subcommand(jp)) return cmd_jp(m, n, word);
        if (app.got_subcommand(duality)) return cmd_duality(m, n, shape, map);
        if (app.got_subcommand(verify))
            return cmd_verify(max_n > 0 ? max_n : verify_depth_from_env(7));
        if (app.got_subcommand(alcoves)) return cmd_alcoves(radius, highlight, m, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
