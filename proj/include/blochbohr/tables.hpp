#ifndef BLOCHBOHR_TABLES_HPP
#define BLOCHBOHR_TABLES_HPP

#include <string>
#include <vector>

namespace bloch {

// Grid description for one radius table.  Table ids:
//   T1_classical          gamma grid -> (1+g)/(3+g)
//   T2_T3_bloch_bohr      alpha x gamma -> shifted-disk radius
//   T4_upper_R            alpha x gamma -> closed-form upper bound (alpha > 1)
//   T5_T6_p_radius        alpha x gamma -> p-norm radius (uses p)
//   T7_sense_preserving   alpha x gamma -> sense-preserving radius (uses p, d1)
struct TableSpec {
    std::string table_id;
    std::vector<double> gammas;
    std::vector<double> alphas; // unused for T1_classical
    double p = 1.0;
    double d1 = 0.0;
};

// the published grid for a table id; throws on unknown ids
TableSpec published_spec(const std::string& table_id);

// Numeric grid with named columns.  Rows carry the row parameter in the first
// cell; same shape serves the figure exports.
struct TableData {
    std::string table_id;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// computes every cell; threads <= 0 picks hardware concurrency
TableData generate_table(const TableSpec& spec, int threads = 0);

struct CellDiff {
    std::string row_label;
    std::string col_label;
    double expected = 0.0;
    double got = 0.0;
    double diff = 0.0;
    bool ok = true;
};

struct CheckReport {
    std::vector<CellDiff> cells; // every compared cell, in table order
    int mismatches = 0;
};

// Recomputes the published grid and compares cell by cell against the stored
// reference values.  The comparison allowance is max(tol, print precision of
// the stored table): 4 truncated decimals for the classical table, 6 rounded
// decimals elsewhere.  T2_T3 also checks the alpha -> 0+ limit column.
CheckReport check_published(const std::string& table_id, int threads, double tol);

// CSV with LF line endings; row parameters print compactly, cells with 6
// decimals.  JSON carries the same 6-decimal rounding.
std::string render_csv(const TableData& t);
std::string render_json(const TableData& t);

// Figure ids: H_shifted | H1 | H3 (defining-function curves over r for each
// alpha at fixed gamma), circles_Cgamma (boundary circles of the shifted
// disks), rho_gamma (classical radius curve).
struct FigureSpec {
    std::string figure_id;
    double gamma = 0.1;
    std::vector<double> alphas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
    double p = 1.0;
    double d1 = 0.0;
};

TableData figure_data(const FigureSpec& spec, int threads = 0);

} // namespace bloch

#endif
