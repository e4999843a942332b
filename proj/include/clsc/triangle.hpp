#ifndef CLSC_TRIANGLE_HPP
#define CLSC_TRIANGLE_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace clsc {

enum class TriangleKind { cumulative, incremental };

/// Run-off triangle of claim amounts.
///
/// Row i (accident year, 1-based) holds development years j = 1..n+1-i, so
/// exactly the upper-left triangle is populated. Values are immutable after
/// construction and safe to share across threads.
class Triangle {
public:
    /// Builds from per-accident-year rows; row k must have n+1-k entries.
    /// Validates shape, finiteness and n >= 3.
    explicit Triangle(std::vector<std::vector<double>> rows);

    std::size_t n() const { return rows_.size(); }

    /// Cumulative (or incremental) amount for accident year i, development
    /// year j; both 1-based with i+j <= n+1.
    double at(std::size_t i, std::size_t j) const { return rows_[i - 1][j - 1]; }

    /// Number of populated development years in row i.
    std::size_t row_length(std::size_t i) const { return rows_[i - 1].size(); }

    const std::vector<std::vector<double>>& rows() const { return rows_; }

    std::size_t cell_count() const { return n() * (n() + 1) / 2; }

private:
    std::vector<std::vector<double>> rows_;
};

/// Parses the triangle CSV (one accident year per line, shortening rows,
/// '#'-comments and blank lines ignored). For incremental input the rows are
/// cumulated before validation.
Triangle load_triangle(const std::filesystem::path& path, TriangleKind kind);

/// Same parser on in-memory text; used by load_triangle and tests.
Triangle parse_triangle(const std::string& text, TriangleKind kind);

/// Writes the CSV form with 17 significant digits.
void save_triangle(const Triangle& t, const std::filesystem::path& path);

/// X_{i,1} = Y_{i,1}; X_{i,j} = Y_{i,j} - Y_{i,j-1}.
Triangle to_incremental(const Triangle& cumulative);

/// Row-wise cumulative sums; left inverse of to_incremental.
Triangle cumulate(const Triangle& incremental);

/// Y_{i,n+1-i} for i = 1..n in accident-year order.
std::vector<std::pair<std::size_t, double>> latest_diagonal(const Triangle& t);

} // namespace clsc

#endif // CLSC_TRIANGLE_HPP
