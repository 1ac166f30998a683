#include "bnsl/datagen.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace bnsl {

double SimSpec::edge_probability() const {
    return n > 1 ? 2.0 * avg_in_degree / (n - 1) : 0.0;
}

void SimSpec::validate() const {
    if (n < 2) throw Error("simulation needs n >= 2");
    if (n > NodeSet::kMaxNodes) throw Error("simulation n exceeds supported maximum");
    if (samples < 1) throw Error("simulation needs at least 1 sample");
    if (avg_in_degree < 0) throw Error("average in-degree must be nonnegative");
    if (edge_probability() > 1.0 + 1e-12)
        throw Error("average in-degree too large: 2d/(n-1) must be <= 1");
    if (coef_min <= 0 || coef_max < coef_min) throw Error("bad coefficient range");
    if (noise_var_min <= 0 || noise_var_max < noise_var_min) throw Error("bad noise variance range");
}

Dag random_dag(const SimSpec& spec) {
    spec.validate();
    Rng rng = make_stream(spec.seed, "datagen.dag");
    const double p = spec.edge_probability();
    std::vector<NodeSet> parents(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i)
        for (int j = i + 1; j < spec.n; ++j)
            if (rng.next_double() < p)
                parents[static_cast<std::size_t>(j)] = parents[static_cast<std::size_t>(j)].with(i);
    return Dag::make(std::move(parents));
}

Simulated simulate_gaussian(const Dag& truth, const SimSpec& spec) {
    spec.validate();
    if (truth.node_count() != spec.n) throw Error("dag node count does not match spec");
    const int n = spec.n;
    const int N = spec.samples;

    Rng param_rng = make_stream(spec.seed, "datagen.params");
    std::vector<std::vector<double>> coef(static_cast<std::size_t>(n));
    std::vector<double> noise_var(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        truth.parents(j).for_each([&](int) {
            double mag = param_rng.uniform(spec.coef_min, spec.coef_max);
            coef[static_cast<std::size_t>(j)].push_back(param_rng.next_bool() ? mag : -mag);
        });
        noise_var[static_cast<std::size_t>(j)] =
            param_rng.uniform(spec.noise_var_min, spec.noise_var_max);
    }

    Rng noise_rng = make_stream(spec.seed, "datagen.noise");
    std::vector<double> values(static_cast<std::size_t>(N) * n, 0.0);
    // Identity topological order: parents always precede their child.
    for (int r = 0; r < N; ++r) {
        double* row = values.data() + static_cast<std::size_t>(r) * n;
        for (int j = 0; j < n; ++j) {
            double v = std::sqrt(noise_var[static_cast<std::size_t>(j)]) * noise_rng.next_gaussian();
            int k = 0;
            truth.parents(j).for_each(
                [&](int p) { v += coef[static_cast<std::size_t>(j)][static_cast<std::size_t>(k++)] * row[p]; });
            row[j] = v;
        }
    }

    return Simulated{Dataset::continuous(std::move(values), N, n), truth, std::move(coef),
                     std::move(noise_var)};
}

namespace {

bool parse_double(const std::string& field, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(field, &pos);
        while (pos < field.size() && (field[pos] == ' ' || field[pos] == '\r')) ++pos;
        return pos == field.size();
    } catch (...) {
        return false;
    }
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

Dataset load_csv(const std::string& path, const std::vector<ColumnInfo>& kinds) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);

    std::vector<std::vector<double>> rows;
    std::vector<std::string> names;
    std::string line;
    int lineno = 0;
    int ncols = -1;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        std::vector<std::string> fields = split_csv_line(line);

        if (ncols < 0) {
            double probe;
            if (!parse_double(fields[0], probe)) {
                names = fields;
                ncols = static_cast<int>(fields.size());
                continue;
            }
            ncols = static_cast<int>(fields.size());
        }
        if (static_cast<int>(fields.size()) != ncols)
            throw ParseError(path + ": row " + std::to_string(lineno) + " has " +
                             std::to_string(fields.size()) + " fields, expected " +
                             std::to_string(ncols));

        std::vector<double> row(static_cast<std::size_t>(ncols));
        for (int j = 0; j < ncols; ++j) {
            if (!parse_double(fields[static_cast<std::size_t>(j)], row[static_cast<std::size_t>(j)]))
                throw ParseError(path + ": row " + std::to_string(lineno) + ", column " +
                                 std::to_string(j) + ": not a number: '" +
                                 fields[static_cast<std::size_t>(j)] + "'");
        }
        rows.push_back(std::move(row));
    }
    if (ncols < 0) throw ParseError(path + ": empty file");

    const int N = static_cast<int>(rows.size());
    const int n = ncols;

    std::vector<ColumnInfo> resolved = kinds;
    if (resolved.empty()) {
        // Infer: a column of integer codes is discrete with arity max+1.
        bool all_discrete = true;
        std::vector<int> arity(static_cast<std::size_t>(n), 2);
        for (int j = 0; j < n && all_discrete; ++j) {
            int max_code = 1;
            for (int r = 0; r < N; ++r) {
                double v = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                if (v != std::floor(v) || v < 0 || v > 1e6) {
                    all_discrete = false;
                    break;
                }
                max_code = std::max(max_code, static_cast<int>(v));
            }
            arity[static_cast<std::size_t>(j)] = max_code + 1;
        }
        if (all_discrete)
            for (int j = 0; j < n; ++j)
                resolved.push_back(ColumnInfo::discrete(arity[static_cast<std::size_t>(j)]));
        else
            resolved.assign(static_cast<std::size_t>(n), ColumnInfo::continuous());
    }
    if (resolved.size() != static_cast<std::size_t>(n)) throw ParseError("kind count mismatch");

    bool discrete = resolved[0].kind == ColumnKind::Discrete;
    for (const ColumnInfo& k : resolved)
        if ((k.kind == ColumnKind::Discrete) != discrete)
            throw Error("mixed column kinds not supported");

    if (discrete) {
        std::vector<int> codes(static_cast<std::size_t>(N) * n);
        std::vector<int> arities(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) arities[static_cast<std::size_t>(j)] = resolved[static_cast<std::size_t>(j)].arity;
        for (int r = 0; r < N; ++r)
            for (int j = 0; j < n; ++j) {
                double v = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                if (v != std::floor(v))
                    throw ParseError(path + ": row " + std::to_string(r) + ", column " +
                                     std::to_string(j) + ": non-integer code in discrete column");
                codes[static_cast<std::size_t>(r) * n + j] = static_cast<int>(v);
            }
        return Dataset::discrete(std::move(codes), N, n, std::move(arities), std::move(names));
    }

    std::vector<double> values(static_cast<std::size_t>(N) * n);
    for (int r = 0; r < N; ++r)
        for (int j = 0; j < n; ++j)
            values[static_cast<std::size_t>(r) * n + j] =
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    return Dataset::continuous(std::move(values), N, n, std::move(names));
}

void write_csv(const std::string& path, const Dataset& data) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out.precision(12);
    for (int j = 0; j < data.n(); ++j) out << (j ? "," : "") << data.names()[static_cast<std::size_t>(j)];
    out << "\n";
    for (int r = 0; r < data.sample_count(); ++r) {
        for (int j = 0; j < data.n(); ++j) {
            if (j) out << ",";
            if (data.is_discrete())
                out << data.code(r, j);
            else
                out << data.value(r, j);
        }
        out << "\n";
    }
    if (!out) throw Error("failed writing " + path);
}

}  // namespace bnsl
