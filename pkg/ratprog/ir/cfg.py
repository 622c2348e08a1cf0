"""Control flow graph of rational programs."""
from collections import namedtuple

BasicBlock = namedtuple('BasicBlock', 'index start stop')
BasicBlock.__doc__ = """Instructions ``start`` up to (excluded) ``stop``."""


class Cfg(object):
    """Basic blocks and control transfer edges of a program.

    ``edges`` is a sorted tuple of ``(from_block, to_block)`` index pairs.
    """
    def __init__(self, blocks, edges):
        self.blocks = tuple(blocks)
        self.edges = tuple(sorted(set(edges)))

    def successors(self, block_index):
        return [b for a, b in self.edges if a == block_index]

    def __repr__(self):
        return '<Cfg %d blocks, %d edges>' % (len(self.blocks), len(self.edges))

    def __json__(self):
        return {'blocks': [[b.start, b.stop] for b in self.blocks],
                'edges': [list(e) for e in self.edges]}


def _leaders(body):
    leaders = {0}
    for index, ins in enumerate(body):
        leaders.update(ins.jump_targets)
        if ins.is_terminator and index + 1 < len(body):
            leaders.add(index + 1)
    return sorted(leaders)


def build_cfg(program):
    """Partition ``program`` into maximal basic blocks.

    Raises :class:`.InvalidProgram` if the program does not validate.
    """
    program.ensure_valid()
    body = program.body
    leaders = _leaders(body)
    bounds = leaders + [len(body)]
    blocks = [BasicBlock(i, start, stop) for i, (start, stop) in enumerate(zip(bounds, bounds[1:]))]
    block_at = {b.start: b.index for b in blocks}

    edges = []
    for block in blocks:
        last = body[block.stop - 1]
        if last.opcode in ('jump', 'branch_if'):
            edges.extend((block.index, block_at[t]) for t in last.jump_targets)
        elif last.opcode != 'halt_return' and block.stop < len(body):
            edges.append((block.index, block_at[block.stop]))
    return Cfg(blocks, edges)
