#pragma once

#include <string>
#include <vector>

#include "hyper/gelfand.hpp"
#include "hyper/io.hpp"
#include "hyper/random.hpp"
#include "oracles.hpp"

namespace fixture {

struct NamedPair {
    std::string name;
    hyper::GelfandPair pair;
};

// Every pair listed in the bundled manifest, loaded through the file parser.
inline std::vector<NamedPair> bundled_pairs() {
    const auto manifest = hyper::io::load_json(oracle::data_path("pairs.json"));
    std::vector<NamedPair> out;
    for (const auto& entry : manifest.at("pairs")) {
        auto g = hyper::io::parse(hyper::io::load_json(oracle::data_path(entry.at("file").get<std::string>())));
        std::vector<hyper::Index> k;
        for (const auto& label : entry.at("k")) k.push_back(g.index_of(label.get<std::string>()));
        out.push_back({entry.at("name").get<std::string>(), hyper::GelfandPair(std::move(g), std::move(k))});
    }
    return out;
}

inline hyper::PointFunction random_biinvariant(const hyper::GelfandPair& pair, hyper::Rng& rng) {
    return hyper::lift_blocks(pair, rng.complex_normals(pair.blocks()));
}

inline hyper::PointFunction random_function(std::size_t n, hyper::Rng& rng) {
    return hyper::PointFunction{rng.complex_normals(n)};
}

}  // namespace fixture
