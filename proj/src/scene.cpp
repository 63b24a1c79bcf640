#include "cloudcover/scene.hpp"

#include <algorithm>
#include <sstream>

namespace cloudcover {

std::string SceneTask::param(const std::string& key, const std::string& fallback) const {
    for (const auto& [k, v] : params)
        if (k == key) return v;
    return fallback;
}

bool SceneTask::has_param(const std::string& key) const {
    return std::any_of(params.begin(), params.end(),
                       [&](const auto& kv) { return kv.first == key; });
}

const Point& SceneFile::point(const std::string& name) const {
    for (const auto& [n, p] : points)
        if (n == name) return p;
    throw Error(ErrorKind::UnknownName, "point '" + name + "'");
}

const Cloud& SceneFile::cloud(const std::string& name) const {
    auto it = clouds.find(name);
    if (it == clouds.end()) throw Error(ErrorKind::UnknownName, "cloud '" + name + "'");
    return it->second;
}

namespace {

struct Token {
    std::string text;
    std::size_t col;
};

struct LineCtx {
    std::size_t line_no;
    std::vector<Token> tokens;
    std::size_t next = 0;

    [[noreturn]] void fail(ErrorKind kind, const std::string& msg, std::size_t col) const {
        std::ostringstream os;
        os << "line " << line_no << ", col " << col << ": " << msg;
        throw Error(kind, os.str());
    }

    const Token& take(const std::string& what) {
        if (next >= tokens.size())
            fail(ErrorKind::SyntaxError, "expected " + what,
                 tokens.empty() ? 1 : tokens.back().col + tokens.back().text.size());
        return tokens[next++];
    }

    void expect(const std::string& literal) {
        const Token& t = take("'" + literal + "'");
        if (t.text != literal)
            fail(ErrorKind::SyntaxError, "expected '" + literal + "', got '" + t.text + "'", t.col);
    }

    bool done() const { return next >= tokens.size(); }
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

Scalar parse_rat(LineCtx& ctx, const std::string& text, std::size_t col) {
    auto s = parse_scalar(text);
    if (!s) ctx.fail(ErrorKind::BadRational, "bad rational '" + text + "'", col);
    return *s;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    if (out.size() == 1 && out[0].empty()) out.clear();
    return out;
}

Point parse_rat_list(LineCtx& ctx, const std::string& text, std::size_t col) {
    Point p;
    for (const auto& part : split_commas(text)) p.coords.push_back(parse_rat(ctx, part, col));
    return p;
}

std::pair<std::string, std::string> parse_kv(LineCtx& ctx, const Token& t) {
    auto eq = t.text.find('=');
    if (eq == std::string::npos || eq == 0)
        ctx.fail(ErrorKind::SyntaxError, "expected key=value, got '" + t.text + "'", t.col);
    return {t.text.substr(0, eq), t.text.substr(eq + 1)};
}

int parse_int(LineCtx& ctx, const std::string& text, std::size_t col) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        ctx.fail(ErrorKind::SyntaxError, "bad integer '" + text + "'", col);
    }
}

class SceneBuilder {
public:
    SceneFile scene;

    void handle(LineCtx& ctx) {
        const Token& head = ctx.take("directive");
        if (head.text == "version") {
            scene.version = parse_int(ctx, ctx.take("version number").text, head.col);
        } else if (head.text == "dimension") {
            scene.dimension = static_cast<std::size_t>(
                parse_int(ctx, ctx.take("dimension").text, head.col));
        } else if (head.text == "point") {
            handle_point(ctx);
        } else if (head.text == "map") {
            handle_map(ctx);
        } else if (head.text == "cloud") {
            handle_cloud(ctx);
        } else if (head.text == "puncture") {
            handle_puncture(ctx);
        } else if (head.text == "task") {
            handle_task(ctx);
        } else {
            ctx.fail(ErrorKind::SyntaxError, "unknown directive '" + head.text + "'", head.col);
        }
        if (!ctx.done()) {
            const Token& extra = ctx.tokens[ctx.next];
            ctx.fail(ErrorKind::SyntaxError, "unexpected trailing token '" + extra.text + "'",
                     extra.col);
        }
    }

private:
    void check_fresh_name(LineCtx& ctx, const Token& name) {
        bool taken = scene.clouds.count(name.text) ||
                     std::any_of(scene.points.begin(), scene.points.end(),
                                 [&](const auto& kv) { return kv.first == name.text; }) ||
                     std::any_of(scene.maps.begin(), scene.maps.end(),
                                 [&](const auto& kv) { return kv.first == name.text; });
        if (taken) ctx.fail(ErrorKind::SyntaxError, "name '" + name.text + "' already used", name.col);
    }

    void handle_point(LineCtx& ctx) {
        const Token name = ctx.take("point name");
        check_fresh_name(ctx, name);
        ctx.expect("=");
        Point p;
        while (!ctx.done()) {
            const Token& t = ctx.take("coordinate");
            p.coords.push_back(parse_rat(ctx, t.text, t.col));
        }
        if (p.dim() == 0) ctx.fail(ErrorKind::SyntaxError, "point needs coordinates", name.col);
        scene.points.emplace_back(name.text, std::move(p));
    }

    void handle_map(LineCtx& ctx) {
        const Token name = ctx.take("map name");
        check_fresh_name(ctx, name);
        ctx.expect("=");
        std::size_t in_dim = 0, out_dim = 0;
        Point entries, translate;
        while (!ctx.done()) {
            const Token& t = ctx.take("field");
            auto [key, value] = parse_kv(ctx, t);
            if (key == "in")
                in_dim = static_cast<std::size_t>(parse_int(ctx, value, t.col));
            else if (key == "out")
                out_dim = static_cast<std::size_t>(parse_int(ctx, value, t.col));
            else if (key == "matrix")
                entries = parse_rat_list(ctx, value, t.col);
            else if (key == "translate")
                translate = parse_rat_list(ctx, value, t.col);
            else
                ctx.fail(ErrorKind::SyntaxError, "unknown map field '" + key + "'", t.col);
        }
        if (entries.dim() != in_dim * out_dim || translate.dim() != out_dim)
            ctx.fail(ErrorKind::DimensionMismatch, "map '" + name.text + "' shape mismatch", 1);
        Matrix m(out_dim, in_dim);
        m.data = entries.coords;
        scene.maps.emplace_back(name.text, AffineMap(std::move(m), std::move(translate)));
    }

    const AffineMap& lookup_map(LineCtx& ctx, const std::string& name, std::size_t col) {
        for (const auto& [n, m] : scene.maps)
            if (n == name) return m;
        ctx.fail(ErrorKind::UnknownName, "map '" + name + "'", col);
    }

    const Point& lookup_point(LineCtx& ctx, const std::string& name, std::size_t col) {
        for (const auto& [n, p] : scene.points)
            if (n == name) return p;
        ctx.fail(ErrorKind::UnknownName, "point '" + name + "'", col);
    }

    const Cloud& lookup_cloud(LineCtx& ctx, const std::string& name, std::size_t col) {
        auto it = scene.clouds.find(name);
        if (it == scene.clouds.end()) ctx.fail(ErrorKind::UnknownName, "cloud '" + name + "'", col);
        return it->second;
    }

    void handle_cloud(LineCtx& ctx) {
        const Token name = ctx.take("cloud name");
        check_fresh_name(ctx, name);
        ctx.expect("=");
        const Token kind = ctx.take("cloud kind");
        CloudSpec spec;
        spec.name = name.text;
        spec.kind = kind.text;
        std::vector<std::pair<std::string, std::size_t>> cols;
        while (!ctx.done()) {
            const Token& t = ctx.take("field");
            auto kv = parse_kv(ctx, t);
            spec.fields.push_back(kv);
            cols.emplace_back(kv.first, t.col);
        }
        auto field = [&](const std::string& key) -> std::pair<std::string, std::size_t> {
            for (std::size_t i = 0; i < spec.fields.size(); ++i)
                if (spec.fields[i].first == key) return {spec.fields[i].second, cols[i].second};
            ctx.fail(ErrorKind::SyntaxError,
                     "cloud '" + name.text + "' missing field '" + key + "'", kind.col);
        };
        try {
            Cloud built = build_cloud(ctx, spec, field);
            scene.clouds.emplace(spec.name, std::move(built));
        } catch (const Error&) {
            throw;
        }
        scene.cloud_specs.push_back(std::move(spec));
    }

    template <typename FieldFn>
    Cloud build_cloud(LineCtx& ctx, const CloudSpec& spec, FieldFn field) {
        if (spec.kind == "sphere") {
            auto [center_name, c1] = field("center");
            auto [rad, c2] = field("radius_sq");
            auto [at_name, c3] = field("at");
            return Cloud::sphere(lookup_point(ctx, center_name, c1), parse_rat(ctx, rad, c2),
                                 lookup_point(ctx, at_name, c3));
        }
        if (spec.kind == "finite") {
            auto [pts, c1] = field("points");
            auto [at_name, c2] = field("at");
            std::vector<Point> points;
            for (const auto& pname : split_commas(pts))
                points.push_back(lookup_point(ctx, pname, c1));
            return Cloud::finite_set(std::move(points), lookup_point(ctx, at_name, c2));
        }
        if (spec.kind == "union") {
            auto [parts, c1] = field("parts");
            auto [at_name, c2] = field("at");
            std::vector<Cloud> subs;
            for (const auto& cname : split_commas(parts))
                subs.push_back(lookup_cloud(ctx, cname, c1));
            return Cloud::union_of(std::move(subs), lookup_point(ctx, at_name, c2));
        }
        if (spec.kind == "extend") {
            auto [base, c1] = field("base");
            auto [target, c2] = field("target_dim");
            auto [offset, c3] = field("offset");
            return extend(lookup_cloud(ctx, base, c1),
                          static_cast<std::size_t>(parse_int(ctx, target, c2)),
                          parse_rat_list(ctx, offset, c3));
        }
        if (spec.kind == "affine_image") {
            auto [base, c1] = field("base");
            auto [map_name, c2] = field("map");
            return Cloud::affine_image(lookup_map(ctx, map_name, c2), lookup_cloud(ctx, base, c1));
        }
        ctx.fail(ErrorKind::SyntaxError, "unknown cloud kind '" + spec.kind + "'", 1);
    }

    void handle_puncture(LineCtx& ctx) {
        const Token name = ctx.take("cloud name");
        auto it = scene.clouds.find(name.text);
        if (it == scene.clouds.end())
            ctx.fail(ErrorKind::UnknownName, "cloud '" + name.text + "'", name.col);
        ctx.expect("=");
        const Token& t = ctx.take("puncture coordinates");
        Point p = parse_rat_list(ctx, t.text, t.col);
        if (p.dim() != it->second.dim)
            ctx.fail(ErrorKind::DimensionMismatch, "puncture dimension", t.col);
        it->second = it->second.with_puncture(p);
        for (auto& spec : scene.cloud_specs)
            if (spec.name == name.text) spec.punctures.push_back(std::move(p));
    }

    void handle_task(LineCtx& ctx) {
        const Token name = ctx.take("task name");
        ctx.expect("=");
        const Token kind = ctx.take("task kind");
        static const char* kinds[] = {"extend", "collineate", "projective",
                                      "schmerl", "decompose", "verify"};
        if (std::find_if(std::begin(kinds), std::end(kinds),
                         [&](const char* k) { return kind.text == k; }) == std::end(kinds))
            ctx.fail(ErrorKind::SyntaxError, "unknown task kind '" + kind.text + "'", kind.col);
        SceneTask task;
        task.name = name.text;
        task.kind = kind.text;
        while (!ctx.done()) {
            const Token& t = ctx.take("parameter");
            task.params.push_back(parse_kv(ctx, t));
        }
        scene.tasks.push_back(std::move(task));
    }
};

}  // namespace

SceneFile parse_scene(const std::string& text) {
    SceneBuilder builder;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        LineCtx ctx{line_no, tokenize(line)};
        if (ctx.tokens.empty()) continue;
        builder.handle(ctx);
    }
    return builder.scene;
}

namespace {

std::string rat_list(const Point& p) {
    std::string out;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i) out += ",";
        out += scalar_to_string(p[i]);
    }
    return out;
}

}  // namespace

std::string print_scene(const SceneFile& scene) {
    std::ostringstream out;
    out << "version " << scene.version << "\n";
    out << "dimension " << scene.dimension << "\n";
    for (const auto& [name, p] : scene.points) {
        out << "point " << name << " =";
        for (const auto& c : p.coords) out << " " << scalar_to_string(c);
        out << "\n";
    }
    for (const auto& [name, m] : scene.maps) {
        out << "map " << name << " = in=" << m.in_dim() << " out=" << m.out_dim() << " matrix=";
        for (std::size_t i = 0; i < m.matrix.data.size(); ++i) {
            if (i) out << ",";
            out << scalar_to_string(m.matrix.data[i]);
        }
        out << " translate=" << rat_list(m.translation) << "\n";
    }
    for (const auto& spec : scene.cloud_specs) {
        out << "cloud " << spec.name << " = " << spec.kind;
        for (const auto& [k, v] : spec.fields) out << " " << k << "=" << v;
        out << "\n";
        for (const auto& p : spec.punctures)
            out << "puncture " << spec.name << " = " << rat_list(p) << "\n";
    }
    for (const auto& task : scene.tasks) {
        out << "task " << task.name << " = " << task.kind;
        for (const auto& [k, v] : task.params) out << " " << k << "=" << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace cloudcover
