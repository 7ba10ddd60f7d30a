#include "lndt/bushn.hpp"

#include <stdexcept>
#include <vector>

namespace lndt {

BushNVal BushNVal::base(Atom atom) {
  BushNVal b(Kind::Base, 0);
  b.atom_ = std::make_shared<const Atom>(std::move(atom));
  return b;
}

BushNVal BushNVal::nil(std::size_t level) { return BushNVal(Kind::Nil, level); }

BushNVal BushNVal::cons(std::size_t level, BushNVal head, BushNVal tail) {
  BushNVal b(Kind::Cons, level);
  b.head_ = std::make_shared<const BushNVal>(std::move(head));
  b.tail_ = std::make_shared<const BushNVal>(std::move(tail));
  return b;
}

const Atom& BushNVal::atom() const {
  if (kind_ != Kind::Base) throw std::logic_error("atom() on a non-base BushN node");
  return *atom_;
}

const BushNVal& BushNVal::head() const {
  if (kind_ != Kind::Cons) throw std::logic_error("head() on a non-cons BushN node");
  return *head_;
}

const BushNVal& BushNVal::tail() const {
  if (kind_ != Kind::Cons) throw std::logic_error("tail() on a non-cons BushN node");
  return *tail_;
}

bool operator==(const BushNVal& a, const BushNVal& b) noexcept {
  if (a.kind_ != b.kind_ || a.level_ != b.level_) return false;
  switch (a.kind_) {
    case BushNVal::Kind::Base:
      return *a.atom_ == *b.atom_;
    case BushNVal::Kind::Nil:
      return true;
    case BushNVal::Kind::Cons:
      return *a.head_ == *b.head_ && *a.tail_ == *b.tail_;
  }
  return false;
}

std::string to_string(const BushNVal& b) {
  switch (b.kind()) {
    case BushNVal::Kind::Base:
      return "BaseBN(" + print_atom(b.atom()) + ")";
    case BushNVal::Kind::Nil:
      return "NilBN(" + std::to_string(b.level()) + ")";
    case BushNVal::Kind::Cons:
      return "ConsBN(" + std::to_string(b.level()) + "," + to_string(b.head()) + "," +
             to_string(b.tail()) + ")";
  }
  return {};
}

bool wf_bushn(const BushNVal& b) {
  const BushNVal* node = &b;
  // Walk the tail chain iteratively; recurse into heads.
  while (true) {
    switch (node->kind()) {
      case BushNVal::Kind::Base:
        return true;
      case BushNVal::Kind::Nil:
        return node->level() >= 1;
      case BushNVal::Kind::Cons: {
        const std::size_t l = node->level();
        if (l < 1 || node->head().level() != l - 1 || node->tail().level() != l + 1) return false;
        if (!wf_bushn(node->head())) return false;
        node = &node->tail();
        break;
      }
    }
  }
}

namespace {

BushNVal encode(const Val& v, std::size_t level);

BushNVal encode_element(const Val& x, std::size_t level) {
  if (level == 0) return BushNVal::base(x.atom());
  return encode(x, level);
}

BushNVal encode_from(const std::vector<Val>& items, std::size_t index, std::size_t level) {
  if (index == items.size()) return BushNVal::nil(level);
  BushNVal head = encode_element(items[index], level - 1);
  return BushNVal::cons(level, std::move(head), encode_from(items, index + 1, level + 1));
}

BushNVal encode(const Val& v, std::size_t level) { return encode_from(v.children(), 0, level); }

void decode_into(const BushNVal& b, std::vector<Val>& items);

Val decode(const BushNVal& b) {
  std::vector<Val> items;
  decode_into(b, items);
  return Val::seq(std::move(items));
}

void decode_into(const BushNVal& b, std::vector<Val>& items) {
  for (const BushNVal* node = &b; node->kind() == BushNVal::Kind::Cons; node = &node->tail()) {
    const BushNVal& h = node->head();
    items.push_back(h.kind() == BushNVal::Kind::Base ? Val(h.atom()) : decode(h));
  }
}

}  // namespace

BushNVal to_bushn(const Val& v, std::size_t level) {
  if (level == 0) throw ArgumentError("to_bushn: level must be at least 1");
  const AtomSort sort = first_atom_sort(v).value_or(AtomSort::Int);
  WfReport report = wf(app_iter(Code::bush(), level, TypeExpr::base(sort)), v);
  if (!report.ok()) throw IllFormedError(std::move(*report.failure));
  return encode(v, level);
}

Val from_bushn(const BushNVal& b) {
  if (b.kind() == BushNVal::Kind::Base) throw ArgumentError("from_bushn: a bare BaseBN is not a bush");
  if (!wf_bushn(b)) throw ArgumentError("from_bushn: level discipline violated in " + to_string(b));
  return decode(b);
}

}  // namespace lndt
