#include "blowup/job.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<long> parse_longs(const std::string& s, int line) {
    std::vector<long> out;
    for (auto& piece : split(s, ',')) {
        std::string p = trim(piece);
        if (p.empty()) throw ParseError("line " + std::to_string(line) + ": empty number");
        try {
            out.push_back(std::stol(p));
        } catch (...) {
            throw ParseError("line " + std::to_string(line) + ": not an integer: '" + p + "'");
        }
    }
    return out;
}

std::vector<std::string> parse_names(const std::string& s) {
    std::vector<std::string> out;
    for (auto& piece : split(s, ','))
        if (!trim(piece).empty()) out.push_back(trim(piece));
    return out;
}

// "[a,b,c; d,e,f]" -> rows of entry strings (entries contain no ',', ';', ']')
std::vector<std::vector<std::string>> parse_matrix(const std::string& s, int line) {
    std::string body = trim(s);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ParseError("line " + std::to_string(line) + ": matrix must be bracketed [..;..]");
    body = body.substr(1, body.size() - 2);
    std::vector<std::vector<std::string>> rows;
    for (auto& rowText : split(body, ';')) {
        std::vector<std::string> row;
        for (auto& e : split(rowText, ',')) row.push_back(trim(e));
        rows.push_back(std::move(row));
    }
    for (const auto& r : rows)
        if (r.size() != rows.front().size())
            throw ParseError("line " + std::to_string(line) + ": ragged matrix rows");
    return rows;
}

Job parse_text_format(const std::string& text) {
    Job job;
    std::istringstream in(text);
    std::string rawLine;
    int lineNo = 0;
    bool sawRing = false;
    while (std::getline(in, rawLine)) {
        ++lineNo;
        std::string line = trim(rawLine);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        std::string rest = trim(line.substr(head.size()));

        if (head == "field") {
            job.fieldSpec = rest;
        } else if (head == "seed") {
            job.seed = std::stoull(rest);
        } else if (head == "trials") {
            job.trials = std::stoi(rest);
        } else if (head == "semigroup") {
            if (sawRing) throw ParseError("line " + std::to_string(lineNo) + ": ring already set");
            job.isSemigroup = true;
            job.semigroupGens = parse_longs(rest, lineNo);
            sawRing = true;
        } else if (head == "ring") {
            if (sawRing) throw ParseError("line " + std::to_string(lineNo) + ": ring already set");
            job.ringVars = parse_names(rest);
            sawRing = true;
        } else if (head == "weights") {
            job.ringWeights = parse_longs(rest, lineNo);
        } else if (head == "adjoin") {
            job.adjoinVars = parse_names(rest);
        } else if (head == "relation") {
            job.relationTexts.push_back(rest);
        } else if (head == "ideal") {
            std::istringstream rs(rest);
            IdealSpec spec;
            std::string kind;
            rs >> spec.name >> kind;
            std::string tail = trim(rest.substr(
                std::min(rest.size(), rest.find(kind) + kind.size())));
            if (spec.name.empty())
                throw ParseError("line " + std::to_string(lineNo) + ": ideal needs a name");
            if (kind == "gens") {
                spec.kind = IdealSpec::Kind::gens;
                for (auto& g : split(tail, ','))
                    if (!trim(g).empty()) spec.genTexts.push_back(trim(g));
                if (spec.genTexts.empty())
                    throw ParseError("line " + std::to_string(lineNo) + ": ideal without generators");
            } else if (kind == "exponents") {
                spec.kind = IdealSpec::Kind::exponents;
                std::string expPart = tail;
                auto plusPos = tail.find(" plus ");
                if (plusPos != std::string::npos) {
                    expPart = tail.substr(0, plusPos);
                    spec.plusVars = parse_names(tail.substr(plusPos + 6));
                }
                spec.exponents = parse_longs(expPart, lineNo);
            } else if (kind == "minors") {
                spec.kind = IdealSpec::Kind::minors;
                std::istringstream ts(tail);
                ts >> spec.minorSize;
                std::string style;
                ts >> style;
                std::size_t bracket = tail.find('[');
                if (bracket == std::string::npos)
                    throw ParseError("line " + std::to_string(lineNo) + ": minors needs a matrix");
                spec.hilbertBurch = style == "hilbert-burch";
                spec.matrix = parse_matrix(tail.substr(bracket), lineNo);
            } else if (kind == "fitting") {
                spec.kind = IdealSpec::Kind::fitting;
                std::istringstream ts(tail);
                ts >> spec.fittingOf >> spec.fittingIndex;
                if (spec.fittingOf.empty())
                    throw ParseError("line " + std::to_string(lineNo) + ": fitting needs a source ideal");
            } else if (kind == "maximal") {
                spec.kind = IdealSpec::Kind::maximal;
            } else {
                throw ParseError("line " + std::to_string(lineNo) + ": unknown ideal kind '" +
                                 kind + "'");
            }
            job.ideals.push_back(std::move(spec));
        } else if (head == "analyze") {
            std::istringstream as(rest);
            AnalysisSpec a;
            as >> a.name;
            if (a.name.empty())
                throw ParseError("line " + std::to_string(lineNo) + ": analyze needs a name");
            std::string kv;
            while (as >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw ParseError("line " + std::to_string(lineNo) +
                                     ": analysis parameters use key=value, got '" + kv + "'");
                a.params[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            job.analyses.push_back(std::move(a));
        } else {
            throw ParseError("line " + std::to_string(lineNo) + ": unknown directive '" + head +
                             "'");
        }
    }
    if (!sawRing) throw ParseError("input defines no ring or semigroup");
    return job;
}

Job parse_json_format(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("JSON parse failure: ") + e.what());
    }
    Job job;
    if (j.contains("field")) job.fieldSpec = j["field"].get<std::string>();
    if (j.contains("seed")) job.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("trials")) job.trials = j["trials"].get<int>();
    if (j.contains("semigroup")) {
        job.isSemigroup = true;
        job.semigroupGens = j["semigroup"].get<std::vector<long>>();
    } else if (j.contains("ring")) {
        const auto& r = j["ring"];
        job.ringVars = r.at("vars").get<std::vector<std::string>>();
        if (r.contains("weights")) job.ringWeights = r["weights"].get<std::vector<long>>();
        if (r.contains("relations"))
            job.relationTexts = r["relations"].get<std::vector<std::string>>();
    } else {
        throw ParseError("JSON input defines no ring or semigroup");
    }
    if (j.contains("adjoin")) job.adjoinVars = j["adjoin"].get<std::vector<std::string>>();
    for (const auto& spec : j.value("ideals", nlohmann::json::array())) {
        IdealSpec s;
        s.name = spec.at("name").get<std::string>();
        if (spec.contains("gens")) {
            s.kind = IdealSpec::Kind::gens;
            s.genTexts = spec["gens"].get<std::vector<std::string>>();
        } else if (spec.contains("exponents")) {
            s.kind = IdealSpec::Kind::exponents;
            s.exponents = spec["exponents"].get<std::vector<long>>();
            if (spec.contains("plus")) s.plusVars = spec["plus"].get<std::vector<std::string>>();
        } else if (spec.contains("minors")) {
            s.kind = IdealSpec::Kind::minors;
            const auto& m = spec["minors"];
            s.minorSize = m.at("size").get<int>();
            s.matrix = m.at("matrix").get<std::vector<std::vector<std::string>>>();
            s.hilbertBurch = m.value("style", "") == "hilbert-burch";
        } else if (spec.contains("fitting")) {
            s.kind = IdealSpec::Kind::fitting;
            s.fittingOf = spec["fitting"].at("of").get<std::string>();
            s.fittingIndex = spec["fitting"].at("index").get<int>();
        } else if (spec.contains("maximal")) {
            s.kind = IdealSpec::Kind::maximal;
        } else {
            throw ParseError("ideal '" + s.name + "': unknown specification");
        }
        job.ideals.push_back(std::move(s));
    }
    for (const auto& a : j.value("analyses", nlohmann::json::array())) {
        AnalysisSpec s;
        s.name = a.at("analysis").get<std::string>();
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (it.key() == "analysis") continue;
            if (it.value().is_string())
                s.params[it.key()] = it.value().get<std::string>();
            else
                s.params[it.key()] = it.value().dump();
        }
        job.analyses.push_back(std::move(s));
    }
    return job;
}

}  // namespace

Job parse_job_text(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_json_format(text) : parse_text_format(text);
    }
    throw ParseError("empty input");
}

Job parse_job_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_job_text(ss.str());
}

}  // namespace blowup
