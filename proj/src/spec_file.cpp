#include "tptri/spec_file.hpp"

#include "tptri/errors.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace tptri {

bool SpecFile::q_valued() const {
    return r.uses_q() || s.uses_q() || t.uses_q();
}

CoefficientSpec SpecFile::numeric() const {
    if (q_valued())
        throw Error("spec \"" + name + "\" uses q; build it as a q-triangle");
    return CoefficientSpec(r, s, t, name);
}

QCoefficientSpec SpecFile::q_spec() const {
    return QCoefficientSpec(r, s, t, name);
}

namespace {

std::string strip(const std::string& line) {
    std::string out = line;
    if (auto hash = out.find('#'); hash != std::string::npos) out.erase(hash);
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back())))
        out.pop_back();
    std::size_t start = 0;
    while (start < out.size() && std::isspace(static_cast<unsigned char>(out[start])))
        ++start;
    return out.substr(start);
}

}  // namespace

SpecFile parse_spec_file(std::istream& in) {
    SpecFile spec;
    bool have_r = false, have_s = false, have_t = false, have_name = false;

    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = strip(line);
        if (body.empty()) continue;

        std::size_t split = 0;
        while (split < body.size() && !std::isspace(static_cast<unsigned char>(body[split])))
            ++split;
        std::string key = body.substr(0, split);
        while (split < body.size() && std::isspace(static_cast<unsigned char>(body[split])))
            ++split;
        std::string value = body.substr(split);

        auto where = [line_no] { return " (line " + std::to_string(line_no) + ")"; };

        if (value.empty())
            throw ParseError("key \"" + key + "\" has no value" + where());

        if (key == "name") {
            if (have_name) throw ParseError("duplicate key \"name\"" + where());
            have_name = true;
            spec.name = value;
        } else if (key == "r" || key == "s" || key == "t") {
            bool& have = (key == "r") ? have_r : (key == "s") ? have_s : have_t;
            if (have) throw ParseError("duplicate key \"" + key + "\"" + where());
            have = true;
            long base = (key == "s") ? 0 : 1;
            SeqGen gen = SeqGen::from_text(value, base);
            if (key == "r")
                spec.r = gen;
            else if (key == "s")
                spec.s = gen;
            else
                spec.t = gen;
        } else if (key == "row") {
            std::istringstream items(value);
            GoldenRow row;
            if (!(items >> row.n) || row.n < 0)
                throw ParseError("row needs a nonnegative index" + where());
            std::string entry;
            while (items >> entry) row.entries.push_back(parse_qpoly(entry));
            if (row.entries.size() != static_cast<std::size_t>(row.n) + 1)
                throw ParseError("row " + std::to_string(row.n) + " has " +
                                 std::to_string(row.entries.size()) + " entries, expected " +
                                 std::to_string(row.n + 1) + where());
            for (const GoldenRow& prev : spec.golden) {
                if (prev.n == row.n)
                    throw ParseError("duplicate row " + std::to_string(row.n) + where());
            }
            spec.golden.push_back(std::move(row));
        } else {
            throw ParseError("unknown key \"" + key + "\"" + where());
        }
    }

    if (!have_r || !have_s || !have_t)
        throw ParseError("spec file must define r, s, and t");
    return spec;
}

SpecFile load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open spec file \"" + path + "\"");
    return parse_spec_file(in);
}

}  // namespace tptri
