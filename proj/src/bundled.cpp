#include "urd/bundled.hpp"

#include "urd/format.hpp"
#include "urd/verifier.hpp"

namespace urd {

bool has_bundled(std::string_view name) { return bundled_text(name) != nullptr; }

const char* bundled_text(std::string_view name) {
    for (const BundledFile& f : bundled_files()) {
        if (name == f.name) return f.text;
    }
    return nullptr;
}

Decomposition load_bundled(std::string_view name) {
    const char* text = bundled_text(name);
    if (text == nullptr) {
        throw StructureError("bundled design '" + std::string(name) + "' is missing");
    }
    Decomposition d;
    try {
        d = parse_decomposition(text);
    } catch (const UrdError& e) {
        throw StructureError("bundled design '" + std::string(name) +
                             "' is corrupted: " + e.what());
    }
    Report rep = verify(d);
    if (!rep.accepted()) {
        throw StructureError("bundled design '" + std::string(name) +
                             "' fails verification: " + rep.violations.front().render());
    }
    return d;
}

}  // namespace urd
