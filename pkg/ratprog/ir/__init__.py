"""Rational programs: exact three-address code with branches."""
from .rational import as_rational, format_rational
from .instructions import Instruction, OPCODES
from .program import RationalProgram
from .validation import validate, ValidationReport, Violation
from .interpreter import Interpreter, ExecutionResult, evaluate, DEFAULT_STEP_LIMIT
from .cfg import build_cfg, Cfg, BasicBlock
from .textual import serialize, parse, read_program, write_program
from .builder import ProgramBuilder, Label, QUOTIENT_RESOLUTION

__all__ = ['as_rational', 'format_rational', 'Instruction', 'OPCODES', 'RationalProgram',
           'validate', 'ValidationReport', 'Violation', 'Interpreter', 'ExecutionResult',
           'evaluate', 'DEFAULT_STEP_LIMIT', 'build_cfg', 'Cfg', 'BasicBlock', 'serialize',
           'parse', 'read_program', 'write_program', 'ProgramBuilder', 'Label',
           'QUOTIENT_RESOLUTION']
