#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace qnc {

/// %.{precision}g formatting; precision clamped to [1, 17].
std::string format_double(double value, int precision);

/// One CSV table: header row plus numeric rows, all formatted at the same
/// precision.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows,
                      int precision);

/// Writes via a temporary file in the same directory followed by a rename,
/// so readers never observe partial content. Throws std::runtime_error on
/// I/O failure.
void atomic_write(const std::filesystem::path& path, std::string_view content);

}  // namespace qnc
