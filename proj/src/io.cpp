#include "sgt/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace sgt {

namespace {

struct Token {
    enum Kind { Int, Ident, Str, Comma, Semi, End } kind;
    std::string text;
    long long value = 0;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next()
    {
        skip_space();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= text_.size()) {
            t.kind = Token::End;
            return t;
        }
        const char c = text_[pos_];
        if (c == ',') {
            advance();
            t.kind = Token::Comma;
            return t;
        }
        if (c == ';') {
            advance();
            t.kind = Token::Semi;
            return t;
        }
        if (c == '"') {
            advance();
            while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
                t.text += text_[pos_];
                advance();
            }
            if (pos_ >= text_.size() || text_[pos_] != '"')
                throw ParseError("unterminated string", t.line, t.column);
            advance();
            t.kind = Token::Str;
            return t;
        }
        if (c == '-' || (c >= '0' && c <= '9')) {
            std::string digits;
            if (c == '-') {
                digits += c;
                advance();
            }
            if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9')
                throw ParseError("expected digits", t.line, t.column);
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
                digits += text_[pos_];
                advance();
            }
            t.kind = Token::Int;
            t.text = digits;
            try {
                t.value = std::stoll(digits);
            } catch (const std::out_of_range&) {
                throw ParseError("integer out of range", t.line, t.column);
            }
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                t.text += text_[pos_];
                advance();
            }
            t.kind = Token::Ident;
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

[[noreturn]] void fail_semantic(const std::string& msg, int line)
{
    throw SemanticError(msg + " (line " + std::to_string(line) + ")");
}

} // namespace

ParsedGame parse_game(std::string_view text)
{
    Lexer lex(text);

    auto expect = [&](Token::Kind kind, const char* what) {
        Token t = lex.next();
        if (t.kind != kind)
            throw ParseError(std::string("expected ") + what, t.line, t.column);
        return t;
    };

    Token t = expect(Token::Ident, "'stochastic'");
    if (t.text != "stochastic")
        throw ParseError("expected 'stochastic'", t.line, t.column);
    t = expect(Token::Ident, "'parity'");
    if (t.text != "parity")
        throw ParseError("expected 'parity'", t.line, t.column);
    const Token count_tok = expect(Token::Int, "vertex count");
    if (count_tok.value < 0)
        fail_semantic("vertex count is negative", count_tok.line);
    const std::size_t n = static_cast<std::size_t>(count_tok.value);
    expect(Token::Semi, "';'");

    std::vector<Owner> owners(n, Owner::Even);
    std::vector<std::vector<VertexId>> succ(n);
    std::vector<int> priorities(n, 0);
    std::vector<std::string> names(n);
    std::vector<bool> declared(n, false);

    while (true) {
        Token id_tok = lex.next();
        if (id_tok.kind == Token::End)
            break;
        if (id_tok.kind != Token::Int)
            throw ParseError("expected vertex id", id_tok.line, id_tok.column);
        if (id_tok.value < 0 || static_cast<std::size_t>(id_tok.value) >= n)
            fail_semantic("vertex id " + id_tok.text + " outside 0.." + std::to_string(n) + "-1",
                          id_tok.line);
        const VertexId id = static_cast<VertexId>(id_tok.value);
        if (declared[id])
            fail_semantic("duplicate vertex id " + id_tok.text, id_tok.line);
        declared[id] = true;

        const Token prio = expect(Token::Int, "priority");
        if (prio.value < 0)
            fail_semantic("priority of vertex " + id_tok.text + " is negative", prio.line);
        priorities[id] = static_cast<int>(prio.value);

        const Token owner = expect(Token::Int, "owner");
        if (owner.value < 0 || owner.value > 2)
            fail_semantic("owner of vertex " + id_tok.text + " must be 0, 1 or 2", owner.line);
        owners[id] = static_cast<Owner>(owner.value);

        // successors: INT (',' INT)* — an immediate ';' is a dead end
        Token look = lex.next();
        while (look.kind == Token::Int) {
            if (look.value < 0 || static_cast<std::size_t>(look.value) >= n)
                fail_semantic("successor " + look.text + " of vertex " + id_tok.text +
                                  " is not declared",
                              look.line);
            const VertexId s = static_cast<VertexId>(look.value);
            for (VertexId existing : succ[id])
                if (existing == s)
                    fail_semantic("duplicate successor " + look.text + " at vertex " +
                                      id_tok.text,
                                  look.line);
            succ[id].push_back(s);
            look = lex.next();
            if (look.kind != Token::Comma)
                break;
            look = lex.next();
            if (look.kind != Token::Int)
                throw ParseError("expected successor id after ','", look.line, look.column);
        }
        if (succ[id].empty())
            fail_semantic("vertex " + id_tok.text + " has no successors (dead end)",
                          id_tok.line);
        if (look.kind == Token::Str) {
            names[id] = look.text;
            look = lex.next();
        }
        if (look.kind != Token::Semi)
            throw ParseError("expected ';'", look.line, look.column);
    }

    for (VertexId v = 0; v < n; ++v)
        if (!declared[v])
            throw SemanticError("vertex " + std::to_string(v) + " is never declared");

    return {StochasticGame(std::move(owners), std::move(succ)),
            PriorityFunction{std::move(priorities)}, std::move(names)};
}

std::string serialize_game(const ParsedGame& pg)
{
    std::ostringstream out;
    const std::size_t n = pg.game.vertex_count();
    out << "stochastic parity " << n << ";\n";
    for (VertexId v = 0; v < n; ++v) {
        out << v << ' ' << pg.priorities.value[v] << ' '
            << static_cast<int>(pg.game.owner(v)) << ' ';
        const auto& succ = pg.game.successors(v);
        for (std::size_t i = 0; i < succ.size(); ++i) {
            if (i)
                out << ',';
            out << succ[i];
        }
        if (!pg.names[v].empty())
            out << " \"" << pg.names[v] << '"';
        out << ";\n";
    }
    return out.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw SemanticError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_file(const std::string& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw SemanticError("cannot write file: " + path);
    out << content;
}

ParsedGame load_game(const std::string& path)
{
    return parse_game(read_file(path));
}

namespace {

using nlohmann::json;

json edge_to_json(const Edge& e)
{
    return json::array({e.src, e.dst});
}

Edge edge_from_json(const json& j, const StochasticGame& g)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() ||
        !j[1].is_number_unsigned())
        throw SemanticError("template edge must be a [src,dst] pair of vertex ids");
    const Edge e{j[0].get<VertexId>(), j[1].get<VertexId>()};
    if (!g.has_edge(e.src, e.dst))
        throw SemanticError("template edge " + std::to_string(e.src) + "->" +
                            std::to_string(e.dst) + " is not a game edge");
    return e;
}

std::pair<int, int> position_of(std::string_view text, std::size_t byte)
{
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace

TemplateDoc parse_template(std::string_view json_text, const StochasticGame& g)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        auto [line, col] = position_of(json_text, e.byte);
        throw ParseError(e.what(), line, col);
    }
    if (!doc.is_object())
        throw SemanticError("template document must be a JSON object");
    for (const char* field : {"prohibited", "live_groups", "colive"})
        if (!doc.contains(field) || !doc[field].is_array())
            throw SemanticError(std::string("template document needs array field '") + field +
                                "'");

    TemplateDoc out;
    for (const json& j : doc["prohibited"])
        out.tpl.prohibited.insert(edge_from_json(j, g));
    for (const json& group : doc["live_groups"]) {
        if (!group.is_array())
            throw SemanticError("live_groups entries must be arrays of edges");
        EdgeSet edges;
        for (const json& j : group)
            edges.insert(edge_from_json(j, g));
        out.tpl.live_groups.push_back(std::move(edges));
    }
    for (const json& j : doc["colive"])
        out.tpl.colive.insert(edge_from_json(j, g));
    validate_template(g, out.tpl);

    if (doc.contains("winning_set")) {
        if (!doc["winning_set"].is_array())
            throw SemanticError("winning_set must be an array of vertex ids");
        VertexSet w(g.vertex_count());
        for (const json& j : doc["winning_set"]) {
            if (!j.is_number_unsigned() || j.get<std::size_t>() >= g.vertex_count())
                throw SemanticError("winning_set entry is not a vertex id");
            w.set(j.get<VertexId>());
        }
        out.winning_set = std::move(w);
    }
    return out;
}

std::string serialize_template(const TemplateDoc& doc)
{
    json j;
    j["prohibited"] = json::array();
    for (const Edge& e : doc.tpl.prohibited)
        j["prohibited"].push_back(edge_to_json(e));
    j["live_groups"] = json::array();
    for (const EdgeSet& group : doc.tpl.live_groups) {
        json edges = json::array();
        for (const Edge& e : group)
            edges.push_back(edge_to_json(e));
        j["live_groups"].push_back(std::move(edges));
    }
    j["colive"] = json::array();
    for (const Edge& e : doc.tpl.colive)
        j["colive"].push_back(edge_to_json(e));
    if (doc.winning_set) {
        j["winning_set"] = json::array();
        for_each_vertex(*doc.winning_set, [&](VertexId v) { j["winning_set"].push_back(v); });
    }
    return j.dump(2) + "\n";
}

TemplateDoc load_template(const std::string& path, const StochasticGame& g)
{
    return parse_template(read_file(path), g);
}

} // namespace sgt
