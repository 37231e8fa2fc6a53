#pragma once

#include "fixtures.hpp"
#include "model.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace axiobench {

// In-process name -> factory-builder table backing the CLI's --model flag.
// External models register here (see samples/) and become runnable without
// touching the driver.
class ModelRegistry {
public:
    using Builder =
        std::function<std::shared_ptr<const ModelFactory>(std::size_t width)>;

    static ModelRegistry& instance() {
        static ModelRegistry registry;
        return registry;
    }

    void add(const std::string& name, Builder builder) {
        entries_[name] = std::move(builder);
    }

    bool contains(const std::string& name) const {
        return entries_.count(name) != 0;
    }

    std::shared_ptr<const ModelFactory> build(const std::string& name,
                                              std::size_t width) const {
        const auto it = entries_.find(name);
        if (it == entries_.end())
            return nullptr;
        return it->second(width);
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        out.reserve(entries_.size());
        for (const auto& [name, _] : entries_)
            out.push_back(name);
        return out;  // map order: already sorted
    }

private:
    ModelRegistry() = default;
    std::map<std::string, Builder> entries_;
};

inline void register_builtin_models() {
    auto& reg = ModelRegistry::instance();
    for (const std::string& variant : fixture_names())
        reg.add(variant, [variant](std::size_t width) {
            return make_fixture(variant, width);
        });
    // Contract-violating probe model, kept out of fixture_names() so the
    // failure-matrix tooling never iterates over it.
    reg.add("no_clone",
            [](std::size_t width) { return make_fixture("no_clone", width); });
}

}  // namespace axiobench
