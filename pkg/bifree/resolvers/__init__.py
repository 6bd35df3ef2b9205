# -*- coding: utf-8 -*-

from .path import Path
from .logpath import LogPath
