"""Index-witnessed lists and a root-constrained JSON document model."""

from .core import (
    DepList,
    EmptyList,
    IndexedFamily,
    IndexMismatch,
    NonEmptyWitness,
    TODO_FAMILY,
    TodoItem,
    TodoStatus,
    make_item,
)
from .predicate import (
    IS_COMPLETE,
    IS_DONE,
    InvalidWitness,
    IsDone,
    Predicate,
    PredicateViolation,
    PredList,
    non_empty,
)
from .jsondoc import (
    JPRED,
    JSON_ENTRY_FAMILY,
    JSON_FAMILY,
    JArray,
    JBool,
    JDoc,
    JMap,
    JNull,
    JNum,
    JStr,
    JTy,
    JWitness,
    JsonDoc,
    NotAMap,
    RootNotMap,
    count_nodes,
    get,
    jarray,
    jdoc,
    jmap,
    jty_counts,
    jty_of,
    max_depth,
)
from .jsontext import (
    MAX_DEPTH,
    NotADocument,
    ParseError,
    ParseErrorKind,
    parse,
    serialize,
)

__all__ = [
    "DepList", "EmptyList", "IndexedFamily", "IndexMismatch", "NonEmptyWitness",
    "TODO_FAMILY", "TodoItem", "TodoStatus", "make_item",
    "IS_COMPLETE", "IS_DONE", "InvalidWitness", "IsDone", "Predicate",
    "PredicateViolation", "PredList", "non_empty",
    "JPRED", "JSON_ENTRY_FAMILY", "JSON_FAMILY", "JArray", "JBool", "JDoc",
    "JMap", "JNull", "JNum", "JStr", "JTy", "JWitness", "JsonDoc", "NotAMap",
    "RootNotMap", "count_nodes", "get", "jarray", "jdoc", "jmap", "jty_counts",
    "jty_of", "max_depth",
    "MAX_DEPTH", "NotADocument", "ParseError", "ParseErrorKind", "parse",
    "serialize",
]

__version__ = "0.1.0"
