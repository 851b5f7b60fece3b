#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ridde/series.hpp"

namespace ridde {

/// Loads selected columns of a UTF-8, comma-delimited, header-first CSV
/// file as channels. An empty selection means every column. Non-numeric
/// cells raise ParseError naming the row and column.
std::vector<SeriesChannel> load_csv(const std::filesystem::path& path, const std::vector<std::string>& columns = {});

} // namespace ridde
