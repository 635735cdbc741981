#include "ultranear/datasets.hpp"

namespace ultranear {

namespace {

DissimilarityMap from_ints(int n, std::initializer_list<int> upper,
                           std::vector<std::string> labels = {}) {
    std::vector<Rat> entries;
    entries.reserve(upper.size());
    for (int v : upper) entries.emplace_back(v);
    return DissimilarityMap(n, std::move(entries), std::move(labels));
}

std::vector<std::vector<Rat>> columns_from_ints(int rows, int cols, const int* data) {
    std::vector<std::vector<Rat>> out(static_cast<std::size_t>(cols));
    for (int c = 0; c < cols; ++c) {
        out[static_cast<std::size_t>(c)].reserve(static_cast<std::size_t>(rows));
        for (int r = 0; r < rows; ++r)
            out[static_cast<std::size_t>(c)].emplace_back(data[r * cols + c]);
    }
    return out;
}

} // namespace

DissimilarityMap paper_n3() {
    return from_ints(3, {2, 4, 8});
}

DissimilarityMap paper_n4() {
    return from_ints(4, {6, 6, 5, 14, 12, 9});
}

DissimilarityMap paper_n8() {
    return from_ints(8,
                     {32, 48, 51, 50, 48, 98, 148,  //
                      26, 34, 29, 33, 84, 136,      //
                      42, 44, 44, 92, 152,          //
                      44, 38, 86, 142,              //
                      24, 89, 142,                  //
                      90, 142,                      //
                      148},
                     {"D", "B", "R", "W", "S", "SL", "C", "M"});
}

std::optional<DissimilarityMap> builtin_dataset(std::string_view name) {
    if (name == "paper-n3") return paper_n3();
    if (name == "paper-n4") return paper_n4();
    if (name == "paper-n8") return paper_n8();
    return std::nullopt;
}

const std::vector<std::vector<Rat>>& reference_rays_n4() {
    // Rows are pairs in lexicographic order, columns are rays.
    static const int data[6 * 8] = {
        10, 10, 8,  2,  2,  10, 10, 9,  //
        5,  2,  10, 10, 10, 9,  2,  10, //
        1,  5,  1,  8,  9,  9,  9,  9,  //
        10, 10, 10, 10, 10, 10, 10, 10, //
        10, 10, 8,  8,  9,  10, 10, 8,  //
        5,  5,  10, 10, 10, 5,  9,  10,
    };
    static const std::vector<std::vector<Rat>> columns = columns_from_ints(6, 8, data);
    return columns;
}

const std::vector<std::vector<Rat>>& reference_rays_n8() {
    static const int data[28 * 16] = {
        41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  //
        41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  //
        42,  42,  42,  43,  42,  42,  42,  43,  42,  42,  42,  43,  42,  42,  42,  42,  //
        41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  //
        41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  41,  //
        89,  89,  89,  89,  93,  89,  89,  89,  93,  89,  89,  89,  93,  89,  89,  89,  //
        143, 143, 143, 143, 143, 143, 145, 143, 143, 143, 145, 143, 143, 143, 143, 145, //
        35,  35,  17,  35,  35,  35,  35,  35,  35,  35,  35,  17,  17,  17,  17,  17,  //
        42,  42,  42,  43,  42,  42,  42,  43,  42,  42,  42,  43,  42,  42,  42,  42,  //
        24,  20,  35,  24,  24,  33,  24,  20,  20,  20,  20,  35,  35,  38,  35,  35,  //
        24,  24,  35,  24,  24,  24,  24,  24,  24,  33,  24,  35,  35,  38,  35,  35,  //
        89,  89,  89,  89,  93,  89,  89,  89,  93,  89,  89,  89,  93,  89,  89,  89,  //
        143, 143, 143, 143, 143, 143, 145, 143, 143, 143, 145, 143, 143, 143, 143, 145, //
        42,  42,  42,  43,  42,  42,  42,  43,  42,  42,  42,  43,  42,  42,  42,  42,  //
        35,  35,  35,  35,  35,  35,  35,  35,  35,  35,  35,  35,  35,  38,  35,  35,  //
        35,  35,  35,  35,  35,  35,  35,  35,  35,  35,  35,  35,  35,  38,  35,  35,  //
        89,  89,  89,  89,  93,  89,  89,  89,  93,  89,  89,  89,  93,  89,  89,  89,  //
        143, 143, 143, 143, 143, 143, 145, 143, 143, 143, 145, 143, 143, 143, 143, 145, //
        42,  42,  42,  43,  42,  42,  42,  43,  42,  42,  42,  43,  42,  42,  42,  42,  //
        42,  42,  42,  43,  42,  42,  42,  43,  42,  42,  42,  43,  42,  42,  42,  42,  //
        89,  89,  89,  89,  93,  89,  89,  89,  93,  89,  89,  89,  93,  89,  89,  89,  //
        143, 143, 143, 143, 143, 143, 145, 143, 143, 143, 145, 143, 143, 143, 143, 145, //
        15,  24,  15,  15,  15,  33,  15,  24,  24,  33,  24,  15,  15,  15,  33,  15,  //
        89,  89,  89,  89,  93,  89,  89,  89,  93,  89,  89,  89,  93,  89,  89,  89,  //
        143, 143, 143, 143, 143, 143, 145, 143, 143, 143, 145, 143, 143, 143, 143, 145, //
        89,  89,  89,  89,  93,  89,  89,  89,  93,  89,  89,  89,  93,  89,  89,  89,  //
        143, 143, 143, 143, 143, 143, 145, 143, 143, 143, 145, 143, 143, 143, 143, 145, //
        143, 143, 143, 143, 143, 143, 145, 143, 143, 143, 145, 143, 143, 143, 143, 145,
    };
    static const std::vector<std::vector<Rat>> columns = columns_from_ints(28, 16, data);
    return columns;
}

} // namespace ultranear
