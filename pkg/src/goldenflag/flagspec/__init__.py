"""Declarative flag-spec language: tokenizer, parser, and lowering
into exact flag layouts."""

from .lexer import KEYWORDS, Token, TokenKind, tokenize
from .lower import lower, lower_expr, lower_source
from .parser import (
    BinOp,
    CoordCenter,
    DiagonalCenter,
    ExprAst,
    LetDecl,
    NameRef,
    Negate,
    NumberLit,
    PhiConst,
    RegionDecl,
    SpecAst,
    SqrtCall,
    StarDecl,
    parse,
    parse_expression,
    parse_source,
)

__all__ = [
    "BinOp",
    "CoordCenter",
    "DiagonalCenter",
    "ExprAst",
    "KEYWORDS",
    "LetDecl",
    "NameRef",
    "Negate",
    "NumberLit",
    "PhiConst",
    "RegionDecl",
    "SpecAst",
    "SqrtCall",
    "StarDecl",
    "Token",
    "TokenKind",
    "lower",
    "lower_expr",
    "lower_source",
    "parse",
    "parse_expression",
    "parse_source",
    "tokenize",
]
