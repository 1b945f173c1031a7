"""Braid group computations: Garside normal forms, conjugacy, Artin action, combing, Dehornoy order."""

from .normal_form import LeftNormalForm
from .simple import SimpleElement
from .words import BraidError, BraidWord, Permutation, parse_word

__all__ = ["BraidError", "BraidWord", "LeftNormalForm", "Permutation", "SimpleElement", "parse_word"]
