#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "afenum/framework.hpp"

namespace afenum {

enum class FileFormat { Apx, Tgf };

// `arg(a).` and `att(a,b).` statements, any number per line, `%` comments.
// Attacks may precede the declarations they use; an attack naming an argument
// that is never declared raises SemanticError with its line.
Framework parse_apx(std::string_view text);
// Node lines `ID [label]`, a `#` line, then edge lines `A B`.
Framework parse_tgf(std::string_view text);

std::string write_apx(const Framework& af);
std::string write_tgf(const Framework& af);

Framework parse_framework(std::string_view text, FileFormat format);
// Guesses from the extension (.apx / .tgf); nullopt if neither.
std::optional<FileFormat> format_from_path(std::string_view path);
std::optional<FileFormat> format_from_name(std::string_view name);
// Throws InputError if the file cannot be read or the format is unknown.
Framework load_framework(const std::string& path, std::optional<FileFormat> format = std::nullopt);

// Label lists sorted within each extension, extensions ordered by size and
// then lexicographically.
std::vector<std::vector<std::string>> labelled_extensions(const Framework& af, const std::vector<Extension>& exts);
// "{a,b}"
std::string format_extension(const std::vector<std::string>& labels);

}  // namespace afenum
