/** Assignment board: one /assign call per course column, standings rendered. */

import { describe, expect, it } from 'vitest';

import { ApiClient } from '../src/api.js';
import { assignmentBoard } from '../src/views/board.js';
import type { CandidateRecord, FacultySchema } from '../src/types.js';
import schemaJson from './fixtures/schema.json';
import { fakeServer, flush } from './fakeServer.js';

const schema = schemaJson as FacultySchema;

const ROSTER: CandidateRecord[] = [
  {
    candidate_id: 'a1',
    bsc: 'Software',
    msc: 'Artificial Intelligence',
    phd: 'Artificial Intelligence',
    taught: ['AI', 'DB', 'AD'],
    experience: 4,
  },
];

describe('assignment board', () => {
  it('has one column per catalog course', () => {
    const board = assignmentBoard(schema, new ApiClient('', fakeServer().fetch), () => []);
    const columns = Array.from(board.querySelectorAll('.board-column')).map(
      (c) => c.getAttribute('data-course'),
    );
    expect(columns).toEqual(schema.courses);
  });

  it('asks the service for a suggestion and renders the standings', async () => {
    const server = fakeServer();
    const board = assignmentBoard(schema, new ApiClient('', server.fetch), () => ROSTER);
    const column = board.querySelector('[data-course="AD"]')!;
    column.querySelector('button')!.click();
    await flush();

    expect(server.log).toEqual(['POST /assign']);
    expect(column.querySelector('.selected')!.getAttribute('data-selected')).toBe('a1');
    expect(column.querySelectorAll('.standings li')).toHaveLength(1);
  });

  it('asks for candidates before calling the service', async () => {
    const server = fakeServer();
    const board = assignmentBoard(schema, new ApiClient('', server.fetch), () => []);
    board.querySelector('button')!.click();
    await flush();
    expect(server.log).toHaveLength(0);
    expect(board.querySelector('.column-result .hint')).not.toBeNull();
  });
});
