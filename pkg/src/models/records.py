"""
Embedded Trees Sequence Records
One emitted row of a sequence or table
"""

from typing import List, Optional, Union

from pydantic import BaseModel


class SequenceRecord(BaseModel):
    """JSON-lines schema: family, n, s, m, value"""
    family: str
    n: int
    s: Optional[int] = None
    m: Optional[List[int]] = None
    value: Union[int, str]

    @property
    def key(self):
        return (self.family, self.n, self.s, tuple(self.m) if self.m is not None else None)
