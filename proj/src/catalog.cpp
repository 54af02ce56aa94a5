#include <algorithm>
#include <stdexcept>

#include "saa/constructions.hpp"

namespace saa {

namespace {

struct Recipe {
    // (kind of first entry, i, j, k, value); value 0 marks the parameter r.
    struct Row {
        char kind;
        int i, j, k;
        int value;
    };
    const char* name;
    int n;
    bool parameterized;
    int expected_class;
    std::vector<Row> rows;
};

constexpr int R = 0;

const std::vector<Recipe>& recipes()
{
    static const std::vector<Recipe> s{
        {"P8-2-1", 4, true, 5, {{'x', 2, 3, 4, R}, {'x', 1, 2, 3, 1}, {'y', 1, 2, 4, 1}}},
        {"P10-2-1", 5, false, 6, {{'x', 3, 4, 5, 1}, {'x', 2, 3, 5, 1}, {'x', 1, 3, 4, 1}, {'y', 1, 2, 5, 1}}},
        {"P10-2-2", 5, true, 6, {{'x', 3, 4, 5, R}, {'x', 2, 3, 5, 1}, {'x', 1, 3, 4, 1}, {'y', 1, 2, 3, 1}}},
        {"P12-2-1",
         6,
         false,
         7,
         {{'x', 4, 5, 6, 1}, {'x', 3, 4, 6, 1}, {'x', 2, 4, 5, 1}, {'x', 1, 2, 4, 1}, {'y', 1, 2, 3, 1}}},
        {"P14-2-1",
         7,
         false,
         7,
         {{'x', 5, 6, 7, 1},
          {'x', 4, 5, 6, 1},
          {'x', 3, 5, 7, 1},
          {'x', 2, 3, 5, 1},
          {'x', 1, 3, 6, 1},
          {'y', 1, 4, 5, 1},
          {'y', 2, 4, 6, 1}}},
        {"P16-2-1",
         8,
         false,
         7,
         {{'x', 6, 7, 8, 1},
          {'x', 5, 6, 8, 1},
          {'x', 4, 6, 7, 1},
          {'x', 3, 5, 8, 1},
          {'x', 2, 5, 7, 1},
          {'x', 1, 5, 6, 1},
          {'y', 1, 4, 8, 1},
          {'y', 2, 4, 7, 1},
          {'y', 3, 4, 6, 1}}},
    };
    return s;
}

const Recipe& find_recipe(std::string_view name)
{
    for (const auto& s : recipes())
        if (name == s.name)
            return s;
    throw std::invalid_argument("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& catalog_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : recipes())
            out.emplace_back(s.name);
        return out;
    }();
    return names;
}

bool catalog_is_parameterized(std::string_view name)
{
    return find_recipe(name).parameterized;
}

CatalogEntry catalog_entry(std::string_view name, PrimeField field, std::optional<std::int64_t> r)
{
    const auto& recipe = find_recipe(name);
    if (r && !recipe.parameterized)
        throw std::invalid_argument(std::string(recipe.name) + " takes no parameter");
    std::optional<FieldElement> param;
    if (recipe.parameterized) {
        param = FieldElement(field, r.value_or(1));
        if (param->is_zero())
            throw std::invalid_argument("parameter r must be nonzero in GF(" + std::to_string(field.p()) + ")");
    }
    std::vector<Triple> triples;
    for (const auto& row : recipe.rows) {
        auto first = row.kind == 'x' ? BasisVector::x(row.i) : BasisVector::y(row.i);
        FieldElement value = row.value == R ? *param : FieldElement(field, row.value);
        triples.push_back({first, BasisVector::y(row.j), BasisVector::y(row.k), value});
    }
    return {recipe.name, param, Presentation(recipe.n, field, std::move(triples)).canonical(), recipe.expected_class, 2};
}

std::vector<CatalogEntry> catalog(PrimeField field)
{
    std::vector<CatalogEntry> out;
    for (const auto& s : recipes())
        out.push_back(catalog_entry(s.name, field));
    return out;
}

}  // namespace saa
