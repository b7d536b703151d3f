#include <spinweil/exterior.hpp>

#include <algorithm>
#include <set>

namespace spinweil {

int GeneratorSpace::index_of(const std::string& label) const
{
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::out_of_range("no generator named " + label);
    return static_cast<int>(it - labels.begin());
}

SpacePtr make_space(std::vector<std::string> labels)
{
    if (labels.size() > 31) throw std::invalid_argument("generator space too large for mask basis");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw std::invalid_argument("generator labels must be distinct");
    auto sp = std::make_shared<GeneratorSpace>();
    sp->labels = std::move(labels);
    return sp;
}

SpacePtr spinor_space(int n)
{
    std::vector<std::string> l;
    for (int i = 1; i <= 2 * n; ++i) l.push_back("x" + std::to_string(i));
    return make_space(std::move(l));
}

SpacePtr vector_space(int n)
{
    std::vector<std::string> l;
    for (int i = 1; i <= 2 * n; ++i) l.push_back("x" + std::to_string(i));
    for (int i = 1; i <= 2 * n; ++i) l.push_back("y" + std::to_string(i));
    return make_space(std::move(l));
}

SpacePtr join_spaces(const SpacePtr& a, const SpacePtr& b)
{
    std::vector<std::string> l = a->labels;
    std::set<std::string> used(l.begin(), l.end());
    for (std::string s : b->labels) {
        while (used.count(s)) s += "'";
        used.insert(s);
        l.push_back(s);
    }
    return make_space(std::move(l));
}

bool same_space(const SpacePtr& a, const SpacePtr& b)
{
    if (a == b) return true;
    if (!a || !b) return false;
    return a->labels == b->labels;
}

}  // namespace spinweil
