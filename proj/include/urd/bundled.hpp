// Certificates checked into resources/ and embedded at build time:
// explicit designs for the sporadic orders plus triple systems generated
// once offline. Everything is re-verified on load; corruption is a hard
// error.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "urd/design.hpp"

namespace urd {

struct BundledFile {
    const char* name;  // resource stem, e.g. "kts-9", "urd-12-6-1"
    const char* text;  // exact file bytes
};

// Generated from resources/*.urd at configure time.
const std::vector<BundledFile>& bundled_files();

bool has_bundled(std::string_view name);

// Raw bytes of a bundled resource, or nullptr.
const char* bundled_text(std::string_view name);

// Parses and verifies the named resource. Throws StructureError when the
// resource is missing or fails verification — never a silent fallback.
Decomposition load_bundled(std::string_view name);

}  // namespace urd
