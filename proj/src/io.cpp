#include "wentropy/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "wentropy/error.hpp"

namespace wentropy {

using nlohmann::json;

std::string format_real(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

namespace {

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<double> to_real(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

double require_real(std::string_view s, std::string_view context) {
    if (auto v = to_real(s)) return *v;
    std::ostringstream os;
    os << "expected a number in " << context << ", got '" << s << "'";
    throw Error(ErrorCode::ParseError, os.str());
}

// Splits "a,b(c,d),e" on top-level commas.
std::vector<std::string_view> split_top_level(std::string_view s) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ',' && depth == 0) {
            parts.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    parts.push_back(trim(s.substr(start)));
    return parts;
}

[[noreturn]] void bad_distribution(std::string_view text, std::string_view why) {
    std::ostringstream os;
    os << "cannot parse distribution '" << text << "': " << why;
    throw Error(ErrorCode::ParseError, os.str());
}

}  // namespace

Distribution parse_distribution(std::string_view text) {
    const std::string_view s = trim(text);
    const auto open = s.find('(');
    if (open == std::string_view::npos || s.back() != ')') bad_distribution(text, "expected name(p1[,p2])");
    const std::string name = lowercase(trim(s.substr(0, open)));
    const std::string_view inner = s.substr(open + 1, s.size() - open - 2);
    auto args = split_top_level(inner);

    auto expect = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi || (args.size() == 1 && args[0].empty())) {
            std::ostringstream os;
            os << name << " takes " << lo << (hi != lo ? "-" + std::to_string(hi) : "") << " parameter(s)";
            bad_distribution(text, os.str());
        }
    };
    auto num = [&](std::size_t i) { return require_real(args[i], text); };

    if (name == "affine") {
        expect(3, 3);
        return parse_distribution(args[0]).affine(num(1), num(2));
    }
    if (name == "exp" || name == "exponential") {
        expect(1, 1);
        return Distribution::exponential(num(0));
    }
    if (name == "pareto") {
        expect(2, 2);
        return Distribution::pareto(num(0), num(1));
    }
    if (name == "uniform") {
        expect(2, 2);
        return Distribution::uniform(num(0), num(1));
    }
    if (name == "power") {
        expect(2, 2);
        return Distribution::power(num(0), num(1));
    }
    if (name == "rayleigh") {
        expect(1, 1);
        return Distribution::rayleigh(num(0));
    }
    if (name == "weibull" || name == "gamma") {
        expect(1, 2);
        auto d = name == "weibull" ? Distribution::weibull(num(0)) : Distribution::gamma(num(0));
        return args.size() == 2 ? d.affine(num(1), 0.0) : d;
    }
    bad_distribution(text, "unknown family '" + name + "'");
}

std::vector<int> parse_size_list(std::string_view text) {
    std::vector<int> out;
    for (auto part : split_top_level(text)) {
        if (part.empty()) continue;
        std::vector<std::string_view> fields;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= part.size(); ++i) {
            if (i == part.size() || part[i] == ':') {
                fields.push_back(part.substr(start, i - start));
                start = i + 1;
            }
        }
        auto integer = [&](std::string_view f) {
            const double v = require_real(f, "size list");
            if (v != std::floor(v) || v < 1 || v > 1e7) {
                throw Error(ErrorCode::ParseError, "sample sizes must be positive integers");
            }
            return static_cast<int>(v);
        };
        if (fields.size() == 1) {
            out.push_back(integer(fields[0]));
        } else if (fields.size() == 2 || fields.size() == 3) {
            const int lo = integer(fields[0]);
            const int hi = integer(fields[1]);
            const int step = fields.size() == 3 ? integer(fields[2]) : 1;
            if (hi < lo) throw Error(ErrorCode::ParseError, "size range must be ascending");
            for (int n = lo; n <= hi; n += step) out.push_back(n);
        } else {
            throw Error(ErrorCode::ParseError, "size ranges are lo:hi or lo:hi:step");
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw Error(ErrorCode::ParseError, "empty size list");
    return out;
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    for (auto part : split_top_level(text)) {
        if (!part.empty()) out.push_back(require_real(part, "number list"));
    }
    if (out.empty()) throw Error(ErrorCode::ParseError, "empty number list");
    return out;
}

// ---- Samples -------------------------------------------------------------------

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
    return in;
}

std::vector<std::string_view> split_csv_row(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            auto cell = trim(line.substr(start, i - start));
            if (cell.size() >= 2 && cell.front() == '"' && cell.back() == '"') cell = cell.substr(1, cell.size() - 2);
            cells.push_back(cell);
            start = i + 1;
        }
    }
    return cells;
}

Sample finish_sample(std::vector<double> values, const std::filesystem::path& path) {
    if (values.empty()) throw Error(ErrorCode::InvalidInputFile, "'" + path.string() + "' contains no observations");
    try {
        return Sample::from_values(std::move(values));
    } catch (const Error& e) {
        throw Error(ErrorCode::InvalidInputFile, "'" + path.string() + "': " + e.what());
    }
}

}  // namespace

Sample read_sample_text(const std::filesystem::path& path) {
    auto in = open_input(path);
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto s = trim(line);
        if (s.empty() || s.front() == '#') continue;
        auto v = to_real(s);
        if (!v) {
            std::ostringstream os;
            os << "'" << path.string() << "' line " << lineno << ": not a number: '" << s << "'";
            throw Error(ErrorCode::InvalidInputFile, os.str());
        }
        values.push_back(*v);
    }
    return finish_sample(std::move(values), path);
}

Sample read_sample_csv(const std::filesystem::path& path, const std::string& column) {
    auto in = open_input(path);
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> index;
    std::vector<double> values;
    while (std::getline(in, line)) {
        ++lineno;
        const auto s = trim(line);
        if (s.empty() || s.front() == '#') continue;
        const auto cells = split_csv_row(s);
        if (!index) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (cells[i] == column) index = i;
            }
            if (!index) {
                throw Error(ErrorCode::InvalidInputFile,
                            "'" + path.string() + "' has no column named '" + column + "'");
            }
            continue;
        }
        if (*index >= cells.size()) {
            std::ostringstream os;
            os << "'" << path.string() << "' line " << lineno << ": missing column '" << column << "'";
            throw Error(ErrorCode::InvalidInputFile, os.str());
        }
        auto v = to_real(cells[*index]);
        if (!v) {
            std::ostringstream os;
            os << "'" << path.string() << "' line " << lineno << ": not a number: '" << cells[*index] << "'";
            throw Error(ErrorCode::InvalidInputFile, os.str());
        }
        values.push_back(*v);
    }
    if (!index) throw Error(ErrorCode::InvalidInputFile, "'" + path.string() + "' has no header row");
    return finish_sample(std::move(values), path);
}

Sample read_sample(const std::filesystem::path& path, const std::optional<std::string>& column) {
    if (column) return read_sample_csv(path, *column);
    if (path.extension() == ".csv") {
        throw Error(ErrorCode::InvalidParameter, "CSV input needs a column name");
    }
    return read_sample_text(path);
}

// ---- Critical tables ---------------------------------------------------------

namespace {

json provenance_json(const Provenance& p) {
    return json{{"seed", p.seed},
                {"replications", p.replications},
                {"alpha", p.alpha},
                {"beta", p.beta},
                {"variant", std::string(to_string(p.variant))},
                {"source", p.source}};
}

EstimatorVariant variant_or_throw(std::string_view text) {
    if (auto v = parse_variant(text)) return *v;
    throw Error(ErrorCode::InvalidInputFile, "unknown estimator variant '" + std::string(text) + "'");
}

}  // namespace

std::string critical_table_to_json(const CriticalTable& table) {
    json entries = json::array();
    for (const auto& e : table.entries()) entries.push_back(json{{"n", e.n}, {"level", e.level}, {"value", e.value}});
    json doc{{"schema", kTableSchema}, {"provenance", provenance_json(table.provenance)}, {"entries", entries}};
    return doc.dump(2) + "\n";
}

std::string critical_table_to_csv(const CriticalTable& table) {
    const auto& p = table.provenance;
    std::ostringstream os;
    os << "# schema: " << kTableSchema << "\n";
    os << "# provenance: seed=" << p.seed << " replications=" << p.replications << " alpha=" << format_real(p.alpha)
       << " beta=" << format_real(p.beta) << " variant=" << to_string(p.variant) << " source=" << p.source << "\n";
    os << "n,level,value\n";
    for (const auto& e : table.entries()) {
        os << e.n << "," << format_real(e.level) << "," << format_real(e.value) << "\n";
    }
    return os.str();
}

CriticalTable critical_table_from_json(std::string_view text) {
    CriticalTable table;
    try {
        const json doc = json::parse(text);
        if (doc.at("schema").get<int>() != kTableSchema) {
            throw Error(ErrorCode::InvalidInputFile, "unsupported critical table schema");
        }
        const auto& p = doc.at("provenance");
        table.provenance.seed = p.at("seed").get<std::uint64_t>();
        table.provenance.replications = p.at("replications").get<std::size_t>();
        table.provenance.alpha = p.at("alpha").get<double>();
        table.provenance.beta = p.at("beta").get<double>();
        table.provenance.variant = variant_or_throw(p.at("variant").get<std::string>());
        table.provenance.source = p.value("source", std::string("simulated"));
        for (const auto& e : doc.at("entries")) {
            table.set(e.at("n").get<int>(), e.at("level").get<double>(), e.at("value").get<double>());
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidInputFile, std::string("malformed critical table JSON: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidInputFile) throw;
        throw Error(ErrorCode::InvalidInputFile, std::string("invalid critical table: ") + e.what());
    }
    return table;
}

CriticalTable critical_table_from_csv(std::string_view text) {
    CriticalTable table;
    bool saw_schema = false;
    bool saw_header = false;
    std::istringstream in{std::string(text)};
    std::string line;
    try {
        while (std::getline(in, line)) {
            auto s = trim(line);
            if (s.empty()) continue;
            if (s.front() == '#') {
                s = trim(s.substr(1));
                if (s.starts_with("schema:")) {
                    if (require_real(s.substr(7), "schema") != kTableSchema) {
                        throw Error(ErrorCode::InvalidInputFile, "unsupported critical table schema");
                    }
                    saw_schema = true;
                } else if (s.starts_with("provenance:")) {
                    std::istringstream fields{std::string(s.substr(11))};
                    std::string kv;
                    while (fields >> kv) {
                        const auto eq = kv.find('=');
                        if (eq == std::string::npos) continue;
                        const std::string key = kv.substr(0, eq);
                        const std::string val = kv.substr(eq + 1);
                        auto& p = table.provenance;
                        if (key == "seed") p.seed = std::stoull(val);
                        else if (key == "replications") p.replications = std::stoull(val);
                        else if (key == "alpha") p.alpha = require_real(val, "alpha");
                        else if (key == "beta") p.beta = require_real(val, "beta");
                        else if (key == "variant") p.variant = variant_or_throw(val);
                        else if (key == "source") p.source = val;
                    }
                }
                continue;
            }
            const auto cells = split_csv_row(s);
            if (!saw_header) {
                if (cells.size() != 3 || cells[0] != "n" || cells[1] != "level" || cells[2] != "value") {
                    throw Error(ErrorCode::InvalidInputFile, "critical table CSV header must be n,level,value");
                }
                saw_header = true;
                continue;
            }
            if (cells.size() != 3) throw Error(ErrorCode::InvalidInputFile, "critical table rows need 3 fields");
            table.set(static_cast<int>(require_real(cells[0], "n")), require_real(cells[1], "level"),
                      require_real(cells[2], "value"));
        }
    } catch (const std::logic_error& e) {
        throw Error(ErrorCode::InvalidInputFile, std::string("malformed critical table CSV: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidInputFile) throw;
        throw Error(ErrorCode::InvalidInputFile, std::string("invalid critical table: ") + e.what());
    }
    if (!saw_schema) throw Error(ErrorCode::InvalidInputFile, "critical table CSV lacks '# schema:' line");
    return table;
}

void write_critical_table(const CriticalTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
    out << (path.extension() == ".csv" ? critical_table_to_csv(table) : critical_table_to_json(table));
    if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path.string() + "'");
}

CriticalTable read_critical_table(const std::filesystem::path& path) {
    auto in = open_input(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return path.extension() == ".csv" ? critical_table_from_csv(buf.str()) : critical_table_from_json(buf.str());
}

}  // namespace wentropy
