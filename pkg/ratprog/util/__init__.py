"""Utilities"""
from .bunch import Bunch
